#include "hlbench/katetov.h"

#include <algorithm>
#include <functional>

#include "hlbench/binary_string.h"
#include "hlbench/error.h"
#include "hlbench/ideals.h"
#include "hlbench/level_tree.h"

namespace hlbench {

const char* const kMorphismScope =
    "finite-scale surrogate check only: a pass certifies that every listed generator's preimage satisfies the "
    "stated surrogate inside the stated window; it does not establish a Katetov relation between the ideals";

namespace {

BinaryString node_of_rank(std::uint64_t rank) {
  int len = 0;
  while (((std::uint64_t{2} << len) - 1) <= rank) ++len;
  return BinaryString(rank - ((std::uint64_t{1} << len) - 1), len);
}

const Rational& param(const Surrogate& s, const std::string& key) {
  auto it = s.params.find(key);
  if (it == s.params.end()) throw Error(Errc::kArgument, "surrogate " + s.name + " needs parameter " + key);
  return it->second;
}

std::uint64_t int_param(const Surrogate& s, const std::string& key) {
  const Rational& r = param(s, key);
  if (boost::multiprecision::denominator(r) != 1 || r < 0) {
    throw Error(Errc::kArgument, "surrogate " + s.name + ": parameter " + key + " must be a natural number");
  }
  return boost::multiprecision::numerator(r).convert_to<std::uint64_t>();
}

void require_ground(const FiniteIdealPresentation& p, GroundKind kind) {
  if (p.ground.kind != kind) {
    throw Error(Errc::kArgument, "surrogate " + p.surrogate.name + " does not apply to a " +
                                     ground_name(p.ground.kind) + " ground");
  }
}

bool covered_by_generators(const FiniteIdealPresentation& p, const std::vector<std::uint64_t>& set,
                           std::uint64_t j, std::size_t& used) {
  if (set.empty()) {
    used = 0;
    return true;
  }
  std::vector<std::size_t> relevant;
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    const auto& gen = p.generators[g];
    for (auto x : set) {
      if (std::binary_search(gen.begin(), gen.end(), x)) {
        relevant.push_back(g);
        break;
      }
    }
  }
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    bool all = true;
    for (auto x : set) {
      bool hit = false;
      for (auto g : chosen) hit = hit || std::binary_search(p.generators[g].begin(), p.generators[g].end(), x);
      if (!hit) {
        all = false;
        break;
      }
    }
    if (all) return true;
    if (chosen.size() >= j) return false;
    for (std::size_t i = from; i < relevant.size(); ++i) {
      chosen.push_back(relevant[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  const bool ok = rec(0);
  used = chosen.size();
  return ok;
}

std::uint64_t apply(const MorphismSpec& f, const Ground& target, std::uint64_t y) {
  if (f.formula == "identity") return y;
  if (f.formula == "project_col") return y / target.bound;
  if (f.formula == "project_row") return y % target.bound;
  auto it = f.table.find(y);
  if (it == f.table.end()) throw Error(Errc::kDomain, "morphism undefined at " + target.format_point(y));
  return it->second;
}

void check_shapes(const MorphismSpec& f, const Ground& target, const Ground& source) {
  if (f.formula == "identity") {
    if (!(target == source)) throw Error(Errc::kShape, "identity needs equal grounds");
    return;
  }
  if (f.formula == "project_col" || f.formula == "project_row") {
    if (target.kind != GroundKind::kGrid || source.kind != GroundKind::kInterval || target.bound != source.bound) {
      throw Error(Errc::kShape, f.formula + " maps a grid [0,N)^2 onto the interval [0,N)");
    }
    return;
  }
  if (f.formula != "table") throw Error(Errc::kShape, "unknown morphism formula '" + f.formula + "'");
  const std::uint64_t size = target.size();
  for (const auto& [y, x] : f.table) {
    if (y >= size) throw Error(Errc::kShape, "morphism argument outside the target ground");
    if (x >= source.size()) {
      throw Error(Errc::kShape, "morphism value at " + target.format_point(y) + " outside the source ground");
    }
  }
  for (std::uint64_t y = 0; y < size; ++y) {
    if (!f.table.contains(y)) throw Error(Errc::kDomain, "morphism undefined at " + target.format_point(y));
  }
}

FiniteIdealPresentation interval_presentation(std::uint64_t n, Surrogate s) {
  FiniteIdealPresentation p;
  p.ground = {GroundKind::kInterval, n};
  p.surrogate = std::move(s);
  return p;
}

void add_generator(FiniteIdealPresentation& p, std::vector<std::uint64_t> gen, std::string label) {
  std::sort(gen.begin(), gen.end());
  gen.erase(std::unique(gen.begin(), gen.end()), gen.end());
  p.generators.push_back(std::move(gen));
  p.labels.push_back(std::move(label));
}

void add_singletons(FiniteIdealPresentation& p) {
  for (std::uint64_t x = 0; x < p.ground.bound; ++x) add_generator(p, {x}, "{" + std::to_string(x) + "}");
}

Surrogate make_surrogate(std::string name, std::map<std::string, Rational> params) {
  return {std::move(name), std::move(params)};
}

}  // namespace

const char* ground_name(GroundKind kind) {
  switch (kind) {
    case GroundKind::kInterval: return "interval";
    case GroundKind::kGrid: return "grid";
    case GroundKind::kNodes: return "nodes";
  }
  return "unknown";
}

GroundKind parse_ground(const std::string& name) {
  if (name == "interval") return GroundKind::kInterval;
  if (name == "grid") return GroundKind::kGrid;
  if (name == "nodes") return GroundKind::kNodes;
  throw Error(Errc::kParse, "unknown ground kind '" + name + "'");
}

std::uint64_t Ground::size() const {
  switch (kind) {
    case GroundKind::kInterval: return bound;
    case GroundKind::kGrid: return bound * bound;
    case GroundKind::kNodes: return (std::uint64_t{1} << bound) - 1;
  }
  return 0;
}

std::string Ground::format_point(std::uint64_t code) const {
  switch (kind) {
    case GroundKind::kInterval: return std::to_string(code);
    case GroundKind::kGrid: return std::to_string(code / bound) + " " + std::to_string(code % bound);
    case GroundKind::kNodes: return node_of_rank(code).to_token();
  }
  return {};
}

std::uint64_t Ground::parse_point(const std::string& text) const {
  auto parse_nat = [](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(Errc::kParse, "expected a natural number, got '" + s + "'");
    }
    return std::stoull(s);
  };
  switch (kind) {
    case GroundKind::kInterval: {
      auto v = parse_nat(text);
      if (v >= bound) throw Error(Errc::kRange, "point " + text + " outside [0, " + std::to_string(bound) + ")");
      return v;
    }
    case GroundKind::kGrid: {
      const auto sp = text.find(' ');
      if (sp == std::string::npos) throw Error(Errc::kParse, "grid point needs 'col row'");
      const auto col = parse_nat(text.substr(0, sp));
      const auto row = parse_nat(text.substr(text.find_first_not_of(' ', sp)));
      if (col >= bound || row >= bound) throw Error(Errc::kRange, "grid point " + text + " outside the grid");
      return col * bound + row;
    }
    case GroundKind::kNodes: {
      auto s = BinaryString::parse(text);
      if (static_cast<std::uint64_t>(s.length()) >= bound) throw Error(Errc::kRange, "node " + text + " too long");
      return s.rank();
    }
  }
  return 0;
}

std::string Surrogate::describe() const {
  std::string out = name + "(";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ", ";
    out += k + "=" + to_fraction(v);
    first = false;
  }
  return out + ")";
}

SurrogateVerdict evaluate_surrogate(const FiniteIdealPresentation& p, const std::vector<std::uint64_t>& set) {
  const Surrogate& s = p.surrogate;
  if (s.name == "cardinality") {
    const auto m = int_param(s, "m");
    return {set.size() <= m, "|X| = " + std::to_string(set.size())};
  }
  if (s.name == "dyadic_density") {
    require_ground(p, GroundKind::kInterval);
    const Rational& eps = param(s, "eps");
    const auto n0 = int_param(s, "n0");
    const auto profile = density_profile(NatSet(set, p.ground.bound), DensityMode::kDyadic);
    Rational worst = 0;
    std::size_t at = 0;
    for (std::size_t n = n0; n < profile.size(); ++n) {
      if (profile[n] > worst) {
        worst = profile[n];
        at = n;
      }
    }
    std::string value = "max d_n for n >= " + std::to_string(n0) + " is " + to_fraction(worst);
    if (worst > 0) value += " at n = " + std::to_string(at);
    return {worst <= eps, value};
  }
  if (s.name == "summable") {
    require_ground(p, GroundKind::kInterval);
    const Rational w = summable_weight(NatSet(set, p.ground.bound));
    return {w <= param(s, "bound"), "weight " + to_fraction(w)};
  }
  if (s.name == "column_count") {
    require_ground(p, GroundKind::kGrid);
    const auto m = int_param(s, "m");
    const auto j = int_param(s, "j");
    std::vector<GridSet::Cell> cells;
    for (auto code : set) cells.emplace_back(code / p.ground.bound, code % p.ground.bound);
    const auto counts = column_profile(GridSet(std::move(cells), p.ground.bound));
    const auto over = static_cast<std::uint64_t>(std::count_if(counts.begin(), counts.end(), [&](auto c) { return c > m; }));
    return {over <= j, std::to_string(over) + " columns hold more than " + std::to_string(m)};
  }
  if (s.name == "phi_tail") {
    require_ground(p, GroundKind::kNodes);
    const auto n0 = int_param(s, "n0");
    std::vector<BinaryString> tail;
    for (auto code : set) {
      auto node = node_of_rank(code);
      if (static_cast<std::uint64_t>(node.length()) >= n0) tail.push_back(node);
    }
    const Rational v = phi(NodeSet(std::move(tail), static_cast<int>(p.ground.bound)));
    return {v <= param(s, "eps"), "phi of tail " + to_fraction(v)};
  }
  if (s.name == "union_of_generators") {
    const auto j = int_param(s, "j");
    std::size_t used = 0;
    const bool ok = covered_by_generators(p, set, j, used);
    return {ok, ok ? "covered by " + std::to_string(used) + " generators" : "not covered by " + std::to_string(j)};
  }
  throw Error(Errc::kArgument, "unknown surrogate '" + s.name + "'");
}

MorphismSpec MorphismSpec::with_point(const Ground& target, const Ground& source, std::uint64_t y,
                                      std::uint64_t x) const {
  check_shapes(*this, target, source);
  MorphismSpec out;
  out.formula = "table";
  for (std::uint64_t t = 0; t < target.size(); ++t) out.table[t] = apply(*this, target, t);
  out.table[y] = x;
  return out;
}

MorphismReport check_morphism(const MorphismSpec& f, const FiniteIdealPresentation& source,
                              const FiniteIdealPresentation& target) {
  if (target.ground.size() > kMaxMaterializedNodes || source.ground.size() > kMaxMaterializedNodes) {
    throw Error(Errc::kShape, "ground set too large to check");
  }
  check_shapes(f, target.ground, source.ground);
  std::vector<std::vector<std::uint64_t>> inverse(source.ground.size());
  for (std::uint64_t y = 0; y < target.ground.size(); ++y) inverse[apply(f, target.ground, y)].push_back(y);

  MorphismReport report;
  report.surrogate = target.surrogate.name;
  for (const auto& [k, v] : target.surrogate.params) report.parameters[k] = to_fraction(v);
  report.scope = kMorphismScope;
  for (std::size_t g = 0; g < source.generators.size(); ++g) {
    std::vector<std::uint64_t> pre;
    for (auto x : source.generators[g]) {
      if (x >= source.ground.size()) throw Error(Errc::kShape, "generator point outside the source ground");
      pre.insert(pre.end(), inverse[x].begin(), inverse[x].end());
    }
    std::sort(pre.begin(), pre.end());
    auto verdict = evaluate_surrogate(target, pre);
    ++report.generators_checked;
    if (!verdict.accepted) {
      const std::string label = g < source.labels.size() ? source.labels[g] : "generator " + std::to_string(g);
      report.violations.push_back({g, label, pre.size(), verdict.value});
    }
  }
  report.pass = report.violations.empty();
  return report;
}

std::vector<std::string> builtin_witness_names() {
  return {"fin_to_z_identity", "summable_to_z_identity", "ed_to_finxfin_identity", "fin_to_finxfin_projection"};
}

BuiltinWitness builtin_witness(const std::string& name) {
  BuiltinWitness w;
  if (name == "fin_to_z_identity") {
    w.source = interval_presentation(64, make_surrogate("cardinality", {{"m", 1}}));
    add_singletons(w.source);
    w.target = interval_presentation(64, make_surrogate("dyadic_density", {{"eps", Rational(1, 24)}, {"n0", 5}}));
    return w;
  }
  if (name == "summable_to_z_identity") {
    constexpr std::uint64_t n = 1024;
    w.source = interval_presentation(n, make_surrogate("summable", {{"bound", 3}}));
    std::vector<std::uint64_t> squares, cubes, powers, triangular;
    for (std::uint64_t k = 0; k * k < n; ++k) squares.push_back(k * k);
    for (std::uint64_t k = 0; k * k * k < n; ++k) cubes.push_back(k * k * k);
    for (std::uint64_t k = 1; k < n; k *= 2) powers.push_back(k);
    for (std::uint64_t k = 0; k * (k + 1) / 2 < n; ++k) triangular.push_back(k * (k + 1) / 2);
    add_generator(w.source, squares, "squares");
    add_generator(w.source, cubes, "cubes");
    add_generator(w.source, powers, "powers of two");
    add_generator(w.source, triangular, "triangular numbers");
    w.target = interval_presentation(n, make_surrogate("dyadic_density", {{"eps", Rational(1, 8)}, {"n0", 4}}));
    return w;
  }
  if (name == "ed_to_finxfin_identity") {
    constexpr std::uint64_t n = 16;
    w.source.ground = {GroundKind::kGrid, n};
    w.source.surrogate = make_surrogate("column_count", {{"m", 1}, {"j", 1}});
    for (std::uint64_t col = 0; col < n; ++col) {
      std::vector<std::uint64_t> column;
      for (std::uint64_t row = 0; row < n; ++row) column.push_back(col * n + row);
      add_generator(w.source, column, "column " + std::to_string(col));
    }
    const std::vector<std::pair<std::string, std::function<std::uint64_t(std::uint64_t)>>> graphs = {
        {"graph of x", [](std::uint64_t x) { return x; }},
        {"graph of 0", [](std::uint64_t) { return std::uint64_t{0}; }},
        {"graph of 15-x", [](std::uint64_t x) { return 15 - x; }},
        {"graph of 3x+1 mod 16", [](std::uint64_t x) { return (3 * x + 1) % 16; }},
    };
    for (const auto& [label, fn] : graphs) {
      std::vector<std::uint64_t> cells;
      for (std::uint64_t x = 0; x < n; ++x) cells.push_back(x * n + fn(x));
      add_generator(w.source, cells, label);
    }
    w.target.ground = {GroundKind::kGrid, n};
    w.target.surrogate = make_surrogate("column_count", {{"m", 1}, {"j", 1}});
    return w;
  }
  if (name == "fin_to_finxfin_projection") {
    constexpr std::uint64_t n = 16;
    w.morphism.formula = "project_col";
    w.source = interval_presentation(n, make_surrogate("cardinality", {{"m", 1}}));
    add_singletons(w.source);
    w.target.ground = {GroundKind::kGrid, n};
    w.target.surrogate = make_surrogate("column_count", {{"m", 1}, {"j", 1}});
    return w;
  }
  throw Error(Errc::kNotFound, "unknown builtin witness '" + name + "'");
}

BuiltinWitness mutated_fin_to_z() {
  BuiltinWitness w = builtin_witness("fin_to_z_identity");
  w.morphism = w.morphism.with_point(w.target.ground, w.source.ground, 33, 32);
  return w;
}

}  // namespace hlbench
