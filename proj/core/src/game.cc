#include "hlbench/game.h"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "hlbench/error.h"
#include "hlbench/splitmix.h"

namespace hlbench {
namespace {

constexpr std::size_t kMaxGeneration = std::size_t{1} << 20;

std::uint64_t param_u64(const StrategyId& id, const std::string& key, std::uint64_t fallback) {
  auto it = id.params.find(key);
  if (it == id.params.end()) return fallback;
  try {
    std::size_t used = 0;
    auto v = std::stoull(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::kArgument, "strategy " + id.name + ": parameter " + key + " is not a natural number");
  }
}

std::set<std::uint64_t> answered(std::span<const Round> history) {
  std::set<std::uint64_t> out;
  for (const auto& r : history) out.insert(r.move_two);
  return out;
}

// --- player I -------------------------------------------------------------

class EmptyPlayer final : public PlayerOne {
 public:
  std::string name() const override { return "empty"; }
  NatSet move(std::span<const Round>, std::uint64_t window) override { return NatSet({}, window); }
};

class InitialSegmentPlayer final : public PlayerOne {
 public:
  std::string name() const override { return "initial-segment"; }
  NatSet move(std::span<const Round> history, std::uint64_t window) override {
    const std::size_t n = history.size();
    const std::uint64_t hi = n >= 63 ? window : std::min<std::uint64_t>(window, std::uint64_t{1} << n);
    return NatSet::interval(0, hi, window);
  }
};

// Includes each point of the window independently with probability 1/odds.
class RandomSetPlayer final : public PlayerOne {
 public:
  RandomSetPlayer(std::uint64_t seed, std::uint64_t odds) : rng_(seed), odds_(odds) {}
  std::string name() const override { return "random"; }
  NatSet move(std::span<const Round>, std::uint64_t window) override {
    std::vector<std::uint64_t> m;
    for (std::uint64_t i = 0; i < window; ++i) {
      if (rng_.below(odds_) == 0) m.push_back(i);
    }
    return NatSet(std::move(m), window);
  }

 private:
  SplitMix64 rng_;
  std::uint64_t odds_;
};

class TreeBuilderPlayer final : public PlayerOne {
 public:
  explicit TreeBuilderPlayer(Coloring c) : builder_(std::move(c)) {}
  std::string name() const override { return "tree-builder"; }
  NatSet move(std::span<const Round>, std::uint64_t window) override { return builder_.next_move(window); }
  void observe(std::uint64_t k) override { builder_.receive(k); }
  bool stuck() const override { return builder_.stuck(); }

 private:
  TreeBuilder builder_;
};

// --- player II ------------------------------------------------------------

class MinLegalPlayer final : public PlayerTwo {
 public:
  std::string name() const override { return "min-legal"; }
  std::optional<std::uint64_t> respond(std::span<const Round> history, const NatSet& move,
                                       std::uint64_t window) override {
    const auto used = answered(history);
    for (std::uint64_t k = 0; k < window; ++k) {
      if (!move.contains(k) && !used.contains(k)) return k;
    }
    return std::nullopt;
  }
};

// Smallest legal k that is at least max(previous + 1, stride * round).
class IncreasingPlayer final : public PlayerTwo {
 public:
  IncreasingPlayer(std::string name, std::uint64_t start, std::uint64_t stride)
      : name_(std::move(name)), start_(start), stride_(stride) {}
  std::string name() const override { return name_; }
  std::optional<std::uint64_t> respond(std::span<const Round> history, const NatSet& move,
                                       std::uint64_t window) override {
    std::uint64_t k = history.empty() ? 0 : history.back().move_two + 1;
    k = std::max<std::uint64_t>(k, start_ + stride_ * history.size());
    for (; k < window; ++k) {
      if (!move.contains(k)) return k;
    }
    return std::nullopt;
  }

 private:
  std::string name_;
  std::uint64_t start_;
  std::uint64_t stride_;
};

class RandomAnswerPlayer final : public PlayerTwo {
 public:
  explicit RandomAnswerPlayer(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  std::optional<std::uint64_t> respond(std::span<const Round> history, const NatSet& move,
                                       std::uint64_t window) override {
    const auto used = answered(history);
    std::vector<std::uint64_t> legal;
    for (std::uint64_t k = 0; k < window; ++k) {
      if (!move.contains(k) && !used.contains(k)) legal.push_back(k);
    }
    if (legal.empty()) return std::nullopt;
    return legal[rng_.below(legal.size())];
  }

 private:
  SplitMix64 rng_;
};

Coloring coloring_from_params(const StrategyId& id, std::uint64_t seed) {
  const auto depth = static_cast<int>(param_u64(id, "depth", 10));
  auto it = id.params.find("coloring");
  const std::string kind = it == id.params.end() ? "random" : it->second;
  if (kind == "zero") return Coloring(depth, 0);
  if (kind == "one") return Coloring(depth, 1);
  if (kind == "random") return random_coloring(depth, seed);
  if (kind == "lastbit") {
    Coloring c(depth, 0);
    for (int n = 1; n < depth; ++n) {
      for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); v += 2) c.set_range(n, v, v + 1, 1);
    }
    return c;
  }
  throw Error(Errc::kArgument, "tree-builder: unknown coloring '" + kind + "'");
}

}  // namespace

StrategyId StrategyId::parse(const std::string& text) {
  StrategyId id;
  const auto colon = text.find(':');
  id.name = text.substr(0, colon);
  if (id.name.empty()) throw Error(Errc::kArgument, "empty strategy name");
  if (colon == std::string::npos) return id;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(Errc::kArgument, "strategy parameter '" + item + "' is not key=value");
    }
    id.params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return id;
}

std::string StrategyId::to_string() const {
  std::string out = name;
  char sep = ':';
  for (const auto& [k, v] : params) {
    out += sep + k + "=" + v;
    sep = ',';
  }
  return out;
}

TreeBuilder::TreeBuilder(Coloring c) : coloring_(std::move(c)) { generations_.push_back({BinaryString{}}); }

NatSet TreeBuilder::next_move(std::uint64_t window) const {
  std::vector<std::uint64_t> out;
  if (!stuck_) {
    for (const auto& s : generations_.back()) {
      const LevelSet levels = i_set(coloring_, s);
      for (int n : levels.members()) {
        if (static_cast<std::uint64_t>(n) < window) out.push_back(static_cast<std::uint64_t>(n));
      }
    }
  }
  return NatSet(std::move(out), window);
}

void TreeBuilder::receive(std::uint64_t k) {
  if (stuck_) return;
  const auto& current = generations_.back();
  const int level = current.front().length();
  if (k >= static_cast<std::uint64_t>(coloring_.depth()) || k <= static_cast<std::uint64_t>(level) ||
      current.size() * 2 > kMaxGeneration) {
    stuck_ = true;
    return;
  }
  const int target = static_cast<int>(k);
  const int shift = target - level;
  std::vector<BinaryString> next;
  next.reserve(current.size() * 2);
  for (const auto& s : current) {
    const std::uint64_t lo = s.value() << shift;
    const auto zeros = coloring_.find(target, lo, lo + (std::uint64_t{1} << shift), 0, 2);
    if (zeros.size() < 2) {
      stuck_ = true;
      return;
    }
    next.emplace_back(zeros[0], target);
    next.emplace_back(zeros[1], target);
  }
  generations_.push_back(std::move(next));
}

TreeBuilderMove tree_builder_move(const Coloring& c, std::span<const Round> history, std::uint64_t window) {
  TreeBuilder builder(c);
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (builder.next_move(window) != history[i].move_one) {
      throw Error(Errc::kProtocol, "history round " + std::to_string(i) +
                                       " does not match the tree-builder move");
    }
    builder.receive(history[i].move_two);
  }
  return {builder.next_move(window), builder.generations(), builder.stuck()};
}

std::vector<std::string> player_one_strategies() { return {"empty", "initial-segment", "random", "tree-builder"}; }

std::vector<std::string> player_two_strategies() {
  return {"min-legal", "min-legal-increasing", "random", "step"};
}

std::unique_ptr<PlayerOne> make_player_one(const StrategyId& id, const StrategyContext& ctx) {
  if (id.name == "empty") return std::make_unique<EmptyPlayer>();
  if (id.name == "initial-segment") return std::make_unique<InitialSegmentPlayer>();
  if (id.name == "random") {
    const auto odds = param_u64(id, "odds", 4);
    if (odds == 0) throw Error(Errc::kArgument, "random: odds must be positive");
    return std::make_unique<RandomSetPlayer>(ctx.seed, odds);
  }
  if (id.name == "tree-builder") {
    return std::make_unique<TreeBuilderPlayer>(ctx.coloring ? *ctx.coloring : coloring_from_params(id, ctx.seed));
  }
  throw Error(Errc::kNotFound, "unknown player I strategy '" + id.name + "'");
}

std::unique_ptr<PlayerTwo> make_player_two(const StrategyId& id, const StrategyContext& ctx) {
  if (id.name == "min-legal") return std::make_unique<MinLegalPlayer>();
  if (id.name == "min-legal-increasing") return std::make_unique<IncreasingPlayer>(id.name, 0, 0);
  if (id.name == "step") {
    return std::make_unique<IncreasingPlayer>(id.name, param_u64(id, "start", 0), param_u64(id, "stride", 2));
  }
  if (id.name == "random") return std::make_unique<RandomAnswerPlayer>(ctx.seed);
  throw Error(Errc::kNotFound, "unknown player II strategy '" + id.name + "'");
}

GameTranscript play(int horizon, PlayerOne& one, PlayerTwo& two, std::uint64_t window) {
  if (horizon < 1) throw Error(Errc::kArgument, "horizon must be at least 1");
  if (window < 1) throw Error(Errc::kArgument, "window must be at least 1");
  GameTranscript t;
  t.horizon = horizon;
  t.window = window;
  std::set<std::uint64_t> seen;
  for (int n = 0; n < horizon; ++n) {
    const std::string where = " in round " + std::to_string(n);
    NatSet move = one.move(t.rounds, window);
    if (move.bound() != window) throw Error(Errc::kProtocol, one.name() + " played outside the window" + where);
    auto k = two.respond(t.rounds, move, window);
    if (!k) {
      t.flags.player_two_exhausted = true;
      break;
    }
    if (*k >= window) throw Error(Errc::kProtocol, two.name() + " answered outside the window" + where);
    if (move.contains(*k)) {
      throw Error(Errc::kProtocol, two.name() + " answered " + std::to_string(*k) + " inside player I's set" + where);
    }
    if (!seen.insert(*k).second) t.flags.repeated_k = true;
    t.rounds.push_back({std::move(move), *k});
    one.observe(*k);
  }
  t.flags.completed = t.rounds.size() == static_cast<std::size_t>(horizon);
  t.flags.player_one_stuck = one.stuck();
  t.outcome = NatSet({seen.begin(), seen.end()}, window);
  return t;
}

GameTranscript play(int horizon, const StrategyId& one, const StrategyId& two, std::uint64_t window,
                    std::uint64_t seed, const std::optional<Coloring>& coloring) {
  SplitMix64 master(seed);
  StrategyContext c1{master.next(), coloring};
  StrategyContext c2{master.next(), std::nullopt};
  auto p1 = make_player_one(one, c1);
  auto p2 = make_player_two(two, c2);
  return play(horizon, *p1, *p2, window);
}

std::vector<GameTranscript> play_many(const std::vector<GameSpec>& specs, int workers) {
  std::vector<GameTranscript> out(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&]() {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        const auto& s = specs[i];
        out[i] = play(s.horizon, s.one, s.two, s.window, s.seed);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace hlbench
