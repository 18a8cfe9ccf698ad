#include "hlbench/search.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <thread>

#include "hlbench/error.h"

namespace hlbench {
namespace {

using Masks = std::array<std::uint8_t, kMaxDepth>;

struct Scored {
  int m = 0;
  std::vector<int> levels;
  std::vector<int> witness;
};

// masks[n]: bit b set when color b occurs on level n of the tree.
Scored score(const Masks& masks, int depth, HLMode mode) {
  Scored out;
  if (mode == HLMode::kByLevels) {
    for (int n = 0; n < depth; ++n) {
      const auto mk = masks[static_cast<std::size_t>(n)];
      if (mk == 3) continue;
      out.levels.push_back(n);
      out.witness.push_back(mk == 2 ? 1 : 0);
    }
  } else {
    std::array<std::vector<int>, 2> by_color;
    for (int n = 0; n < depth; ++n) {
      const auto mk = masks[static_cast<std::size_t>(n)];
      if ((mk & 2) == 0) by_color[0].push_back(n);
      if ((mk & 1) == 0) by_color[1].push_back(n);
    }
    const int b = by_color[1].size() > by_color[0].size() ? 1 : 0;
    out.levels = std::move(by_color[static_cast<std::size_t>(b)]);
    out.witness = {b};
  }
  out.m = static_cast<int>(out.levels.size());
  return out;
}

int upper_bound_levels(const Masks& masks, int depth, HLMode mode) {
  int zero = 0, one = 0, either = 0;
  for (int n = 0; n < depth; ++n) {
    const auto mk = masks[static_cast<std::size_t>(n)];
    if ((mk & 2) == 0) ++zero;
    if ((mk & 1) == 0) ++one;
    if (mk != 3) ++either;
  }
  return mode == HLMode::kByLevels ? either : std::max(zero, one);
}

// The space of embeddings with top level D-1, optionally inside a host tree.
// Candidates are produced in length-lexicographic order.
class EmbeddingSpace {
 public:
  EmbeddingSpace(int depth, const LevelTree* host) : depth_(depth), host_(host) {
    if (host_ != nullptr) {
      if (host_->depth() != depth) throw Error(Errc::kShape, "host depth differs from coloring depth");
      require_valid(*host_);
    }
  }

  int top() const { return depth_ - 1; }
  bool allowed(const BinaryString& u) const { return host_ == nullptr || host_->contains(u); }

  // Images u >= s available for an argument with r > 0 levels below it.
  template <class F>
  void for_each_split(const BinaryString& s, int r, F&& f) const {
    for (int len = s.length(); len <= top() - r; ++len) {
      if (!for_each_on_level(s, len, [&](const BinaryString& u) {
            if (!allowed(u.child(0)) || !allowed(u.child(1))) return true;
            return f(u);
          })) {
        return;
      }
    }
  }

  template <class F>
  void for_each_leaf(const BinaryString& s, F&& f) const {
    for_each_on_level(s, top(), f);
  }

 private:
  template <class F>
  bool for_each_on_level(const BinaryString& s, int len, F&& f) const {
    const int shift = len - s.length();
    const std::uint64_t lo = s.value() << shift;
    const std::uint64_t hi = lo + (std::uint64_t{1} << shift);
    if (host_ == nullptr) {
      for (std::uint64_t v = lo; v < hi; ++v) {
        if (!f(BinaryString(v, len))) return false;
      }
      return true;
    }
    const auto& level = host_->level(len);
    for (auto it = std::lower_bound(level.begin(), level.end(), BinaryString(lo, len));
         it != level.end() && it->value() < hi; ++it) {
      if (!f(*it)) return false;
    }
    return true;
  }

  int depth_;
  const LevelTree* host_;
};

struct Task {
  int remaining;
  BinaryString root;
};

HLCertificate make_certificate(int height, const std::vector<BinaryString>& leaves, const Scored& s,
                               int depth, HLMode mode) {
  HLCertificate cert;
  cert.embedding = TreeEmbedding::from_leaves(height, leaves);
  cert.levels = LevelSet(s.levels, depth);
  cert.mode = mode;
  cert.color_witness = s.witness;
  return cert;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle.
// ---------------------------------------------------------------------------

template <class F>
void enumerate_embeddings(const EmbeddingSpace& space, std::vector<Task>& tasks,
                          std::vector<BinaryString>& leaves, F& on_complete) {
  if (tasks.empty()) {
    on_complete(leaves);
    return;
  }
  const Task task = tasks.back();
  tasks.pop_back();
  if (task.remaining == 0) {
    space.for_each_leaf(task.root, [&](const BinaryString& u) {
      leaves.push_back(u);
      enumerate_embeddings(space, tasks, leaves, on_complete);
      leaves.pop_back();
      return true;
    });
  } else {
    space.for_each_split(task.root, task.remaining, [&](const BinaryString& u) {
      tasks.push_back({task.remaining - 1, u.child(1)});
      tasks.push_back({task.remaining - 1, u.child(0)});
      enumerate_embeddings(space, tasks, leaves, on_complete);
      tasks.pop_back();
      tasks.pop_back();
      return true;
    });
  }
  tasks.push_back(task);
}

// ---------------------------------------------------------------------------
// Branch and bound.
// ---------------------------------------------------------------------------

class BranchAndBound {
 public:
  BranchAndBound(const Coloring& c, const EmbeddingSpace& space, HLMode mode, std::uint64_t cap)
      : c_(c), space_(space), mode_(mode), depth_(c.depth()), cap_(cap) {}

  // Explores every embedding whose first choice (root split, or the single
  // leaf when the height is 0) is `first`.
  void run_from(int height, const BinaryString& first) {
    Masks masks{};
    masks[0] = static_cast<std::uint8_t>(1u << c_.color(BinaryString{}));
    std::vector<Task> tasks;
    if (!take()) return;
    if (height == 0) {
      add_path(masks, first, 1);
      leaves_.push_back(first);
      descend(tasks, masks);
      return;
    }
    add_path(masks, first, 1);
    add_arms(masks, first);
    tasks.push_back({height - 1, first.child(1)});
    tasks.push_back({height - 1, first.child(0)});
    descend(tasks, masks);
  }

  int best_m() const { return best_m_; }
  const std::vector<BinaryString>& best_leaves() const { return best_leaves_; }
  const Masks& best_masks() const { return best_masks_; }
  std::uint64_t explored() const { return explored_; }
  bool aborted() const { return aborted_; }

 private:
  bool take() {
    if (++explored_ > cap_) {
      aborted_ = true;
      explored_ = cap_;
      return false;
    }
    return true;
  }

  void add_path(Masks& masks, const BinaryString& u, int from_len) const {
    for (int len = from_len; len <= u.length(); ++len) {
      masks[static_cast<std::size_t>(len)] |= static_cast<std::uint8_t>(1u << c_.color(u.prefix(len)));
    }
  }

  void add_arms(Masks& masks, const BinaryString& u) const {
    for (int b = 0; b < 2; ++b) {
      masks[static_cast<std::size_t>(u.length() + 1)] |= static_cast<std::uint8_t>(1u << c_.color(u.child(b)));
    }
  }

  bool finished() const { return aborted_ || best_m_ == depth_; }

  void descend(std::vector<Task>& tasks, const Masks& masks) {
    if (upper_bound_levels(masks, depth_, mode_) <= best_m_) return;
    if (tasks.empty()) {
      const int m = score(masks, depth_, mode_).m;
      if (m > best_m_) {
        best_m_ = m;
        best_leaves_ = leaves_;
        best_masks_ = masks;
      }
      return;
    }
    const Task task = tasks.back();
    tasks.pop_back();
    if (task.remaining == 0) {
      space_.for_each_leaf(task.root, [&](const BinaryString& u) {
        if (!take()) return false;
        Masks next = masks;
        add_path(next, u, task.root.length() + 1);
        leaves_.push_back(u);
        descend(tasks, next);
        leaves_.pop_back();
        return !finished();
      });
    } else {
      space_.for_each_split(task.root, task.remaining, [&](const BinaryString& u) {
        if (!take()) return false;
        Masks next = masks;
        add_path(next, u, task.root.length() + 1);
        add_arms(next, u);
        tasks.push_back({task.remaining - 1, u.child(1)});
        tasks.push_back({task.remaining - 1, u.child(0)});
        descend(tasks, next);
        tasks.pop_back();
        tasks.pop_back();
        return !finished();
      });
    }
    tasks.push_back(task);
  }

  const Coloring& c_;
  const EmbeddingSpace& space_;
  HLMode mode_;
  int depth_;
  std::uint64_t cap_;
  std::uint64_t explored_ = 0;
  bool aborted_ = false;
  int best_m_ = -1;
  std::vector<BinaryString> leaves_;
  std::vector<BinaryString> best_leaves_;
  Masks best_masks_{};
};

struct PartitionResult {
  int m = -1;
  std::vector<BinaryString> leaves;
  Masks masks{};
  std::uint64_t explored = 0;
  bool aborted = false;
};

PartitionResult run_partition(const Coloring& c, const EmbeddingSpace& space, HLMode mode, int height,
                              const BinaryString& first, std::uint64_t cap) {
  BranchAndBound bb(c, space, mode, cap);
  bb.run_from(height, first);
  return {bb.best_m(), bb.best_leaves(), bb.best_masks(), bb.explored(), bb.aborted()};
}

void check_height(int height, int depth) {
  if (height < 0 || height >= depth || height > 16) {
    throw Error(Errc::kArgument, "height " + std::to_string(height) + " impossible for depth " +
                                     std::to_string(depth));
  }
}

}  // namespace

const char* mode_name(HLMode mode) { return mode == HLMode::kUniform ? "uniform" : "by_levels"; }

HLMode parse_mode(const std::string& name) {
  if (name == "uniform") return HLMode::kUniform;
  if (name == "by_levels" || name == "by-levels") return HLMode::kByLevels;
  throw Error(Errc::kArgument, "unknown mode '" + name + "'");
}

bool verify_certificate(const Coloring& c, const HLCertificate& cert) {
  const LevelTree q = embed_closure(cert.embedding, c.depth());
  const auto& levels = cert.levels.members();
  if (!levels.empty() && levels.back() >= c.depth()) return false;
  if (cert.mode == HLMode::kUniform) {
    if (cert.color_witness.size() != 1) return false;
    const unsigned want = 1u << cert.color_witness[0];
    for (int n : levels) {
      if (slice_colors(c, q, n) != want) return false;
    }
    return true;
  }
  if (cert.color_witness.size() != levels.size()) return false;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (slice_colors(c, q, levels[i]) != (1u << cert.color_witness[i])) return false;
  }
  return true;
}

BigInt enumeration_bound(int depth, int height, const LevelTree* host) {
  check_height(height, depth);
  const int top = depth - 1;
  if (host == nullptr) {
    // count[r][l]: embeddings of height r below a fixed node on level l.
    std::vector<std::vector<BigInt>> count(static_cast<std::size_t>(height + 1),
                                           std::vector<BigInt>(static_cast<std::size_t>(depth + 1), 0));
    for (int l = 0; l <= top; ++l) count[0][static_cast<std::size_t>(l)] = BigInt(1) << (top - l);
    for (int r = 1; r <= height; ++r) {
      for (int l = 0; l <= top; ++l) {
        BigInt total = 0;
        for (int k = l; k <= top - r; ++k) {
          const BigInt& arm = count[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k + 1)];
          total += (BigInt(1) << (k - l)) * arm * arm;
        }
        count[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)] = total;
      }
    }
    return count[static_cast<std::size_t>(height)][0];
  }
  const EmbeddingSpace space(depth, host);
  std::function<BigInt(int, const BinaryString&)> rec = [&](int r, const BinaryString& s) -> BigInt {
    BigInt total = 0;
    if (r == 0) {
      space.for_each_leaf(s, [&](const BinaryString&) {
        ++total;
        return true;
      });
      return total;
    }
    space.for_each_split(s, r, [&](const BinaryString& u) {
      total += rec(r - 1, u.child(0)) * rec(r - 1, u.child(1));
      return true;
    });
    return total;
  };
  return rec(height, BinaryString{});
}

SearchResult brute_force_max(const Coloring& c, const SearchBudget& budget, HLMode mode, const LevelTree* host) {
  const int depth = c.depth();
  const BigInt bound = enumeration_bound(depth, budget.height, host);
  if (bound > budget.node_budget) {
    throw Error(Errc::kBudget, "oracle would enumerate " + bound.str() + " embeddings, budget is " +
                                   std::to_string(budget.node_budget));
  }
  const EmbeddingSpace space(depth, host);
  int best_m = -1;
  std::vector<BinaryString> best_leaves;
  Scored best_score;
  std::uint64_t seen = 0;
  auto visit = [&](const std::vector<BinaryString>& leaves) {
    ++seen;
    const LevelTree q = LevelTree::closure_of(depth, leaves);
    Masks masks{};
    for (int n = 0; n < depth; ++n) masks[static_cast<std::size_t>(n)] = static_cast<std::uint8_t>(slice_colors(c, q, n));
    Scored s = score(masks, depth, mode);
    if (s.m > best_m) {
      best_m = s.m;
      best_leaves = leaves;
      best_score = std::move(s);
    }
  };
  std::vector<Task> tasks{{budget.height, BinaryString{}}};
  std::vector<BinaryString> leaves;
  enumerate_embeddings(space, tasks, leaves, visit);
  if (best_m < 0) throw Error(Errc::kNotFound, "no embedding of height " + std::to_string(budget.height));

  SearchResult out;
  out.m = best_m;
  out.certificate = make_certificate(budget.height, best_leaves, best_score, depth, mode);
  out.complete = true;
  out.target_met = best_m >= budget.min_levels;
  out.explored = seen;
  return out;
}

SearchResult search_best(const Coloring& c, const SearchBudget& budget, HLMode mode, const LevelTree* host) {
  const int depth = c.depth();
  check_height(budget.height, depth);
  const EmbeddingSpace space(depth, host);

  std::vector<BinaryString> firsts;
  auto collect = [&](const BinaryString& u) {
    firsts.push_back(u);
    return true;
  };
  if (budget.height == 0) {
    space.for_each_leaf(BinaryString{}, collect);
  } else {
    space.for_each_split(BinaryString{}, budget.height, collect);
  }
  if (firsts.empty()) throw Error(Errc::kNotFound, "no embedding of height " + std::to_string(budget.height));

  std::vector<PartitionResult> parts(firsts.size());
  const auto workers = static_cast<std::size_t>(std::max(1, budget.workers));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < firsts.size(); i = next++) {
      parts[i] = run_partition(c, space, mode, budget.height, firsts[i], budget.node_budget);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, firsts.size()); ++w) pool.emplace_back(work);
  }

  // Merge in partition order so the outcome matches a single sequential pass
  // with one shared budget.
  SearchResult out;
  int best = -1;
  std::size_t best_part = 0;
  std::uint64_t remaining = budget.node_budget;
  std::uint64_t explored = 0;
  bool complete = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (remaining == 0) {
      complete = false;
      break;
    }
    if (parts[i].explored > remaining || parts[i].aborted) {
      // Replay this partition with what is left; runs are deterministic, so
      // this is exactly the prefix a sequential pass would have explored.
      parts[i] = run_partition(c, space, mode, budget.height, firsts[i], remaining);
      explored += parts[i].explored;
      if (parts[i].m > best) {
        best = parts[i].m;
        best_part = i;
      }
      complete = false;
      break;
    }
    explored += parts[i].explored;
    remaining -= parts[i].explored;
    if (parts[i].m > best) {
      best = parts[i].m;
      best_part = i;
    }
  }
  if (best < 0) throw Error(Errc::kBudget, "budget exhausted before the first complete embedding");

  const auto& win = parts[best_part];
  out.m = win.m;
  out.certificate = make_certificate(budget.height, win.leaves, score(win.masks, depth, mode), depth, mode);
  out.complete = complete;
  out.target_met = out.m >= budget.min_levels;
  out.explored = explored;
  return out;
}

BandCheck check_band(const ZDensityInstance& inst, int n, std::vector<int> selection) {
  if (n < 1 || n > inst.n_max) throw Error(Errc::kArgument, "band " + std::to_string(n) + " does not exist");
  if (selection.empty()) throw Error(Errc::kArgument, "empty selection for band " + std::to_string(n));
  std::sort(selection.begin(), selection.end());
  selection.erase(std::unique(selection.begin(), selection.end()), selection.end());
  const auto& band = inst.band(n);
  const int depth = inst.depth();
  std::vector<BinaryString> tops;
  for (int j : selection) {
    if (j < 0 || static_cast<std::size_t>(j) >= band.branches.size()) {
      throw Error(Errc::kArgument, "branch index " + std::to_string(j) + " outside band " + std::to_string(n));
    }
    // Continue the branch to the top of the host along its 0-successors.
    BinaryString s = band.branches[static_cast<std::size_t>(j)];
    while (s.length() < depth - 1) s = s.child(0);
    tops.push_back(s);
  }
  const LevelTree q = LevelTree::closure_of(depth, tops);
  const LevelSet h = h_set(inst.coloring, q);
  BandCheck out;
  out.n = n;
  out.selection = selection;
  out.expected = std::uint64_t{1} << (n - static_cast<int>(selection.size()) + 1);
  out.actual = h.count_between(band.first_level, band.last_level);
  return out;
}

std::vector<BandCheck> zdensity_band_check(const ZDensityInstance& inst,
                                           const std::vector<std::vector<int>>& selections) {
  if (selections.size() != static_cast<std::size_t>(inst.n_max)) {
    throw Error(Errc::kArgument, "expected one selection per band");
  }
  std::vector<BandCheck> out;
  for (int n = 1; n <= inst.n_max; ++n) out.push_back(check_band(inst, n, selections[static_cast<std::size_t>(n - 1)]));
  return out;
}

std::vector<BandCheck> zdensity_exhaustive_check(const ZDensityInstance& inst) {
  std::vector<BandCheck> out;
  for (int n = 1; n <= inst.n_max; ++n) {
    for (unsigned subset = 1; subset < (1u << n); ++subset) {
      std::vector<int> sel;
      for (int j = 0; j < n; ++j) {
        if (subset >> j & 1u) sel.push_back(j);
      }
      out.push_back(check_band(inst, n, sel));
    }
  }
  return out;
}

}  // namespace hlbench
