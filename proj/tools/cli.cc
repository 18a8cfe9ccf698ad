#include "cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hlbench/coloring.h"
#include "hlbench/constructions.h"
#include "hlbench/error.h"
#include "hlbench/game.h"
#include "hlbench/ideals.h"
#include "hlbench/json_codec.h"
#include "hlbench/katetov.h"
#include "hlbench/properties.h"
#include "hlbench/search.h"
#include "hlbench/text_format.h"
#include "hlbench/version.h"

namespace hlbench::cli {
namespace {

struct Shared {
  std::string out_path;
  bool verbose = false;
  std::uint64_t seed = 0;
};

struct HsetArgs {
  std::string coloring, tree;
};

struct ZDensityArgs {
  int n_max = 4;
};

struct SearchArgs {
  int depth = 6;
  int height = 1;
  std::string coloring;
  int zdensity = 0;
  std::uint64_t budget = 50'000'000;
  int workers = 1;
  int min_levels = 1;
  bool oracle = false;
  std::string verify;
};

struct PairingArgs {
  std::vector<int> base_levels{1, 2};
  std::size_t cap = 1000;
  int depth = 8;
  std::uint64_t random_trees = 50;
  int extra_branches = 3;
};

struct LevelsArgs {
  int max_len = 4;
  int depth = 12;
};

struct ProfileArgs {
  std::string natset, gridset, nodeset;
  std::uint64_t ell = 8;
  std::uint64_t threshold = 1;
  bool strict = false;
};

struct GameArgs {
  std::string p1 = "initial-segment";
  std::string p2 = "min-legal";
  int horizon = 10;
  std::uint64_t window = 64;
  std::string coloring;
  ProfileArgs profile;
};

struct KatetovArgs {
  std::string builtin;
  bool mutated = false;
  bool list = false;
  std::string morphism, source, target;
};

Json fractions(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_fraction(v));
  return out;
}

std::string join(const std::vector<int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s;
}

Json natset_profile(const NatSet& a, const ProfileArgs& p) {
  const auto cmp = p.strict ? Comparison::kGreater : Comparison::kAtLeast;
  return Json{{"size", a.size()},
              {"bound", a.bound()},
              {"dyadic_density", fractions(density_profile(a, DensityMode::kDyadic))},
              {"natural_density", fractions(density_profile(a, DensityMode::kNatural))},
              {"summable_weight", to_fraction(summable_weight(a))},
              {"interval_count",
               {{"ell", p.ell},
                {"threshold", p.threshold},
                {"comparison", p.strict ? ">" : ">="},
                {"windows", interval_count(a, p.ell, p.threshold, cmp)}}}};
}

// Human-readable tables for --verbose.
void print_levels(std::ostream& err, const char* title, const std::vector<int>& levels) {
  err << title << ":";
  for (int n : levels) err << ' ' << n;
  err << "\n";
}

int cmd_hset(const HsetArgs& a, Json& report, std::ostream& err, bool verbose) {
  const Coloring c = load_coloring(a.coloring);
  const LevelTree p = load_tree(a.tree);
  const LevelSet h = h_set(c, p);
  report["config"] = {{"coloring", a.coloring}, {"tree", a.tree}};
  report["depth"] = c.depth();
  report["levels"] = h.members();
  if (verbose) {
    err << "level  width  colors\n";
    for (int n = 0; n < p.depth(); ++n) {
      const unsigned mask = slice_colors(c, p, n);
      err << std::setw(5) << n << std::setw(7) << p.width(n) << "  " << ((mask & 1u) ? "0" : "")
          << ((mask & 2u) ? "1" : "") << (h.contains(n) ? "  mono" : "") << "\n";
    }
  }
  return 0;
}

int cmd_zdensity(const ZDensityArgs& a, Json& report, std::ostream& err, bool verbose) {
  const ZDensityInstance inst = zdensity_coloring(a.n_max);
  const auto checks = zdensity_exhaustive_check(inst);
  bool pass = true;
  Json bands = Json::array();
  for (const auto& b : inst.bands) {
    bands.push_back(to_json(b));
    pass = pass && b.is_bijection();
  }
  Json rows = Json::array();
  std::size_t passed = 0;
  for (const auto& chk : checks) {
    rows.push_back(to_json(chk));
    passed += chk.pass() ? 1 : 0;
  }
  pass = pass && passed == checks.size();
  report["config"] = {{"n_max", a.n_max}};
  report["depth"] = inst.depth();
  report["bands"] = bands;
  report["checks"] = rows;
  report["checks_passed"] = passed;
  report["checks_total"] = checks.size();
  report["pass"] = pass;
  if (verbose) {
    err << "band  selection        expected  actual\n";
    for (const auto& chk : checks) {
      err << std::setw(4) << chk.n << "  " << std::left << std::setw(15) << join(chk.selection) << std::right
          << std::setw(10) << chk.expected << std::setw(8) << chk.actual << (chk.pass() ? "" : "  FAIL") << "\n";
    }
  }
  return pass ? 0 : 1;
}

int cmd_search(const SearchArgs& a, HLMode mode, std::uint64_t seed, Json& report, std::ostream& err,
               bool verbose) {
  Coloring c;
  std::optional<ZDensityInstance> inst;
  Json config = {{"height", a.height},   {"budget", a.budget},         {"workers", a.workers},
                 {"oracle", a.oracle},   {"min_levels", a.min_levels}, {"mode", mode_name(mode)}};
  if (!a.coloring.empty()) {
    c = load_coloring(a.coloring);
    config["coloring"] = a.coloring;
  } else if (a.zdensity > 0) {
    inst = zdensity_coloring(a.zdensity);
    c = inst->coloring;
    config["zdensity"] = a.zdensity;
  } else {
    c = random_coloring(a.depth, seed);
    config["coloring"] = "random";
  }
  config["depth"] = c.depth();
  report["config"] = config;
  const LevelTree* host = inst ? &inst->host : nullptr;

  if (!a.verify.empty()) {
    std::ifstream in(a.verify);
    if (!in) throw Error(Errc::kNotFound, "cannot open '" + a.verify + "'");
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw Error(Errc::kParse, a.verify + ": " + e.what());
    }
    const HLCertificate cert = certificate_from_json(j.contains("certificate") ? j.at("certificate") : j);
    const bool ok = verify_certificate(c, cert);
    report["verified"] = ok;
    report["m"] = cert.levels.size();
    report["certificate"] = to_json(cert);
    return ok ? 0 : 1;
  }

  SearchBudget budget;
  budget.height = a.height;
  budget.min_levels = a.min_levels;
  budget.node_budget = a.budget;
  budget.workers = a.workers;
  const SearchResult r = search_best(c, budget, mode, host);
  const Json cert = to_json(r.certificate);
  const HLCertificate back = certificate_from_json(cert);
  const bool round_trip = back == r.certificate && verify_certificate(c, back);
  report["result"] = to_json(r);
  report["certificate_verified"] = round_trip;
  bool pass = round_trip;
  if (a.oracle) {
    const SearchResult o = brute_force_max(c, budget, mode, host);
    const bool agree = o.m == r.m;
    report["oracle"] = {{"m", o.m}, {"certificate", to_json(o.certificate)}, {"agrees", agree}};
    pass = pass && agree;
  }
  report["pass"] = pass;
  if (verbose) {
    err << "m = " << r.m << (r.complete ? "" : " (incomplete)") << ", explored " << r.explored << "\n";
    err << "split nodes:";
    for (const auto& s : r.certificate.embedding.split_nodes()) err << ' ' << s.to_token();
    err << "\nleaf images:";
    for (const auto& s : r.certificate.embedding.leaf_images()) err << ' ' << s.to_token();
    err << "\n";
    print_levels(err, "levels", r.certificate.levels.members());
  }
  return pass ? 0 : 1;
}

int cmd_pairing(const PairingArgs& a, std::uint64_t seed, Json& report, std::ostream& err, bool verbose) {
  const PairingColoring pc = pairing_coloring(a.base_levels, a.cap, a.depth);
  const auto system_problem = check_pairing_system(pc.system);
  const PairingReport r = pairing_check(pc, a.random_trees, a.extra_branches, seed);
  Json matchings = Json::array();
  for (std::size_t i = 0; i < pc.system.size(); ++i) {
    Json pairs = Json::array();
    for (const auto& [lo, hi] : pc.system.matchings[i].pairs) pairs.push_back({lo.to_token(), hi.to_token()});
    matchings.push_back({{"n", pc.system.matchings[i].n},
                         {"pairs", pairs},
                         {"levels", pc.system.level_sets[i].members()}});
  }
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"matching", v.matching},
                          {"pair", {v.low.to_token(), v.high.to_token()}},
                          {"leaves", nodes_json(v.leaves)},
                          {"levels", v.levels}});
  }
  const bool pass = !system_problem && r.pass();
  report["config"] = {{"base_levels", a.base_levels},
                      {"cap", a.cap},
                      {"depth", a.depth},
                      {"random_trees", a.random_trees},
                      {"extra_branches", a.extra_branches}};
  report["matchings"] = matchings;
  report["system_valid"] = !system_problem;
  if (system_problem) report["system_problem"] = *system_problem;
  report["two_branch_trees"] = r.two_branch_trees;
  report["random_trees"] = r.random_trees;
  report["violations"] = violations;
  report["pass"] = pass;
  if (verbose) {
    for (std::size_t i = 0; i < pc.system.size(); ++i) {
      err << "x_" << i << " (n=" << pc.system.matchings[i].n << "):";
      for (const auto& [lo, hi] : pc.system.matchings[i].pairs) err << " {" << lo.to_token() << "," << hi.to_token() << "}";
      print_levels(err, "  A", pc.system.level_sets[i].members());
    }
    err << r.two_branch_trees << " two-branch trees, " << r.random_trees << " random trees, "
        << r.violations.size() << " violations\n";
  }
  return pass ? 0 : 1;
}

int cmd_levels(const LevelsArgs& a, Json& report, std::ostream& err, bool verbose) {
  const SplittingAssignment s = residue_splitting(a.max_len, a.depth);
  const auto problem = check_splitting(s);
  const Coloring c = levels_coloring(s, a.depth);
  const LevelsReport r = levels_check(s, c);
  Json sets = Json::object();
  for (std::size_t i = 0; i < s.domain.size(); ++i) sets[s.domain[i].to_token()] = s.sets[i].members();
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"t", f.t.to_token()}, {"level", f.level}});
  const bool pass = !problem && r.pass();
  report["config"] = {{"max_len", a.max_len}, {"depth", a.depth}};
  report["splitting"] = sets;
  report["splitting_valid"] = !problem;
  report["cases"] = r.cases;
  report["failures"] = failures;
  report["pass"] = pass;
  if (verbose) {
    for (std::size_t i = 0; i < s.domain.size(); ++i) {
      err << std::left << std::setw(6) << s.domain[i].to_token() << std::right;
      print_levels(err, "", s.sets[i].members());
    }
    err << r.cases << " cases, " << r.failures.size() << " failures\n";
  }
  return pass ? 0 : 1;
}

int cmd_profile(const ProfileArgs& a, Json& report, std::ostream& err, bool verbose) {
  const int given = !a.natset.empty() + !a.gridset.empty() + !a.nodeset.empty();
  if (given != 1) throw CLI::ValidationError("profile", "exactly one of --natset, --gridset, --nodeset is required");
  if (!a.natset.empty()) {
    const NatSet s = load_natset(a.natset);
    report["config"] = {{"natset", a.natset}, {"ell", a.ell}, {"threshold", a.threshold}, {"strict", a.strict}};
    report["profile"] = natset_profile(s, a);
    if (verbose) {
      const auto d = density_profile(s, DensityMode::kDyadic);
      err << "window  density\n";
      for (std::size_t n = 0; n < d.size(); ++n) err << std::setw(6) << n << "  " << to_fraction(d[n]) << "\n";
    }
  } else if (!a.gridset.empty()) {
    const GridSet g = load_gridset(a.gridset);
    const auto cols = column_profile(g);
    report["config"] = {{"gridset", a.gridset}};
    report["profile"] = {{"size", g.size()}, {"bound", g.bound()}, {"columns", cols}};
    if (verbose) {
      err << "column  hits\n";
      for (std::size_t i = 0; i < cols.size(); ++i) err << std::setw(6) << i << std::setw(6) << cols[i] << "\n";
    }
  } else {
    const NodeSet s = load_nodeset(a.nodeset);
    const auto bar = phi_bar_profile(s, s.depth());
    report["config"] = {{"nodeset", a.nodeset}};
    report["profile"] = {{"size", s.size()},
                         {"depth", s.depth()},
                         {"minimal_elements", nodes_json(minimal_elements(s).nodes())},
                         {"phi", to_fraction(phi(s))},
                         {"max_antichain_weight", to_fraction(max_antichain_weight(s))},
                         {"phi_bar_profile", fractions(bar)}};
    if (verbose) {
      err << "n  phi(a minus 2^{<n})\n";
      for (std::size_t n = 0; n < bar.size(); ++n) err << n << "  " << to_fraction(bar[n]) << "\n";
    }
  }
  return 0;
}

int cmd_game(const GameArgs& a, std::uint64_t seed, Json& report, std::ostream& err, bool verbose) {
  std::optional<Coloring> coloring;
  if (!a.coloring.empty()) coloring = load_coloring(a.coloring);
  const StrategyId one = StrategyId::parse(a.p1);
  const StrategyId two = StrategyId::parse(a.p2);
  const GameTranscript t = play(a.horizon, one, two, a.window, seed, coloring);
  Json config = {{"p1", one.to_string()},          {"p2", two.to_string()},
                 {"horizon", a.horizon},          {"window", a.window},
                 {"ell", a.profile.ell},          {"threshold", a.profile.threshold},
                 {"strict", a.profile.strict}};
  if (!a.coloring.empty()) config["coloring"] = a.coloring;
  report["config"] = config;
  report["transcript"] = to_json(t);
  report["K_profile"] = natset_profile(t.outcome, a.profile);
  if (verbose) {
    err << "round  |I|  k\n";
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
      err << std::setw(5) << i << std::setw(5) << t.rounds[i].move_one.size() << "  " << t.rounds[i].move_two << "\n";
    }
  }
  return 0;
}

int cmd_katetov(const KatetovArgs& a, Json& report, std::ostream& err, bool verbose) {
  if (a.list) {
    report["builtins"] = builtin_witness_names();
    return 0;
  }
  BuiltinWitness w;
  Json config;
  const bool from_files = !a.morphism.empty() || !a.source.empty() || !a.target.empty();
  const int modes = !a.builtin.empty() + a.mutated + from_files;
  if (modes != 1) {
    throw CLI::ValidationError("katetov", "use exactly one of --builtin, --mutated, or --morphism/--source/--target");
  }
  if (!a.builtin.empty()) {
    w = builtin_witness(a.builtin);
    config["builtin"] = a.builtin;
  } else if (a.mutated) {
    w = mutated_fin_to_z();
    config["builtin"] = "fin_to_z_identity";
    config["mutation"] = "f(33) := 32";
  } else {
    if (a.morphism.empty() || a.source.empty() || a.target.empty()) {
      throw CLI::ValidationError("katetov", "--morphism, --source and --target go together");
    }
    w.source = load_presentation(a.source);
    w.target = load_presentation(a.target);
    w.morphism = load_morphism(a.morphism, w.target.ground, w.source.ground);
    config["morphism"] = a.morphism;
    config["source"] = a.source;
    config["target"] = a.target;
  }
  const MorphismReport r = check_morphism(w.morphism, w.source, w.target);
  report["config"] = config;
  report["report"] = to_json(r);
  report["pass"] = r.pass;
  if (verbose) {
    err << (r.pass ? "pass" : "FAIL") << "  " << r.surrogate << ", " << r.generators_checked << " generators\n";
    for (const auto& v : r.violations) err << "  " << v.label << ": preimage " << v.preimage_size << ", " << v.value << "\n";
  }
  return r.pass ? 0 : 1;
}

bool usage_error(Errc code) {
  switch (code) {
    case Errc::kParse:
    case Errc::kNotFound:
    case Errc::kArgument:
    case Errc::kRange:
    case Errc::kValidation:
    case Errc::kShape:
    case Errc::kDomain:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Halpern-Lauchli workbench", "hlbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Shared shared;
  auto add_shared = [&](CLI::App* sub, bool with_seed) {
    sub->add_option("--out", shared.out_path, "Write the JSON report to this file");
    sub->add_flag("--verbose,-v", shared.verbose, "Print tables to standard error");
    if (with_seed) sub->add_option("--seed", shared.seed, "Seed for all random choices");
  };

  HsetArgs hset;
  auto* s_hset = app.add_subcommand("hset", "Levels on which a coloring is constant on a tree");
  s_hset->add_option("--coloring", hset.coloring, "Coloring file")->required()->check(CLI::ExistingFile);
  s_hset->add_option("--tree", hset.tree, "Tree file")->required()->check(CLI::ExistingFile);
  add_shared(s_hset, false);

  ZDensityArgs zd;
  auto* s_zd = app.add_subcommand("zdensity", "Build the density-zero coloring and check every band");
  s_zd->add_option("--nmax", zd.n_max, "Largest band")->check(CLI::Range(1, 4));
  add_shared(s_zd, false);

  SearchArgs search;
  auto* s_search = app.add_subcommand("search", "Best uniform monochromatic embedding");
  auto* s_levels_search = app.add_subcommand("search-levels", "Best embedding, monochromatic level by level");
  for (auto* sub : {s_search, s_levels_search}) {
    sub->add_option("--depth", search.depth, "Depth of the random coloring")->check(CLI::Range(2, 21));
    sub->add_option("--height", search.height, "Height of the embedded perfect tree")->check(CLI::Range(0, 6));
    auto* col = sub->add_option("--coloring", search.coloring, "Coloring file instead of a random one")
                    ->check(CLI::ExistingFile);
    sub->add_option("--zdensity", search.zdensity, "Search inside the density-zero host of this size")
        ->check(CLI::Range(1, 4))
        ->excludes(col);
    sub->add_option("--budget", search.budget, "Cap on explored choices");
    sub->add_option("--workers", search.workers, "Worker threads")->check(CLI::Range(1, 64));
    sub->add_option("--min-levels", search.min_levels, "Reported as target_met")->check(CLI::NonNegativeNumber);
    sub->add_flag("--oracle", search.oracle, "Cross-check with the exhaustive oracle");
    sub->add_option("--verify", search.verify, "Verify a certificate file instead of searching")
        ->check(CLI::ExistingFile);
    add_shared(sub, true);
  }

  PairingArgs pairing;
  auto* s_pairing = app.add_subcommand("pairing", "Pairing coloring and its disjointness property");
  s_pairing->add_option("--base-levels", pairing.base_levels, "Levels carrying the matchings")->delimiter(',');
  s_pairing->add_option("--cap", pairing.cap, "Matchings per base level")->check(CLI::PositiveNumber);
  s_pairing->add_option("--depth", pairing.depth, "Depth of the coloring")->check(CLI::Range(2, 16));
  s_pairing->add_option("--random-trees", pairing.random_trees, "Random trees per pair");
  s_pairing->add_option("--extra-branches", pairing.extra_branches, "Extra branches per random tree")
      ->check(CLI::Range(0, 64));
  add_shared(s_pairing, true);

  LevelsArgs levels;
  auto* s_levels = app.add_subcommand("levels", "Splitting-levels coloring and its bichromatic property");
  s_levels->add_option("--max-len", levels.max_len, "Longest t in the domain")->check(CLI::Range(0, 10));
  s_levels->add_option("--depth", levels.depth, "Depth of the coloring")->check(CLI::Range(2, 20));
  add_shared(s_levels, false);

  ProfileArgs profile;
  auto* s_profile = app.add_subcommand("profile", "Finite statistics of a set");
  s_profile->add_option("--natset", profile.natset, "natset file")->check(CLI::ExistingFile);
  s_profile->add_option("--gridset", profile.gridset, "gridset file")->check(CLI::ExistingFile);
  s_profile->add_option("--nodeset", profile.nodeset, "nodeset file")->check(CLI::ExistingFile);
  s_profile->add_option("--ell", profile.ell, "Interval length")->check(CLI::PositiveNumber);
  s_profile->add_option("--threshold", profile.threshold, "Hits per interval");
  s_profile->add_flag("--strict", profile.strict, "Count intervals with more than threshold hits");
  add_shared(s_profile, false);

  GameArgs game;
  auto* s_game = app.add_subcommand("game", "Play the evasion game and profile K");
  s_game->add_option("--p1", game.p1, "Player I strategy, name[:key=value,...]");
  s_game->add_option("--p2", game.p2, "Player II strategy, name[:key=value,...]");
  s_game->add_option("--horizon", game.horizon, "Rounds")->check(CLI::Range(1, 100000));
  s_game->add_option("--window", game.window, "Numbers are drawn from [0, window)")->check(CLI::PositiveNumber);
  s_game->add_option("--coloring", game.coloring, "Coloring for the tree builder")->check(CLI::ExistingFile);
  s_game->add_option("--ell", game.profile.ell, "Interval length for the K profile")->check(CLI::PositiveNumber);
  s_game->add_option("--threshold", game.profile.threshold, "Hits per interval for the K profile");
  s_game->add_flag("--strict", game.profile.strict, "Count intervals with more than threshold hits");
  add_shared(s_game, true);

  KatetovArgs katetov;
  auto* s_katetov = app.add_subcommand("katetov", "Check a finite Katetov morphism");
  s_katetov->add_option("--builtin", katetov.builtin, "Name of a builtin witness");
  s_katetov->add_flag("--mutated", katetov.mutated, "The one-point mutation of fin_to_z_identity");
  s_katetov->add_flag("--list", katetov.list, "List builtin witnesses");
  s_katetov->add_option("--morphism", katetov.morphism, "Morphism file")->check(CLI::ExistingFile);
  s_katetov->add_option("--source", katetov.source, "Presentation of I")->check(CLI::ExistingFile);
  s_katetov->add_option("--target", katetov.target, "Presentation of J")->check(CLI::ExistingFile);
  add_shared(s_katetov, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Json report = Json::object();
  report["command"] = command;
  report["version"] = kVersion;
  report["seed"] = shared.seed;
  int status = 0;
  try {
    if (command == "hset") {
      status = cmd_hset(hset, report, err, shared.verbose);
    } else if (command == "zdensity") {
      status = cmd_zdensity(zd, report, err, shared.verbose);
    } else if (command == "search" || command == "search-levels") {
      const HLMode mode = command == "search" ? HLMode::kUniform : HLMode::kByLevels;
      status = cmd_search(search, mode, shared.seed, report, err, shared.verbose);
    } else if (command == "pairing") {
      status = cmd_pairing(pairing, shared.seed, report, err, shared.verbose);
    } else if (command == "levels") {
      status = cmd_levels(levels, report, err, shared.verbose);
    } else if (command == "profile") {
      status = cmd_profile(profile, report, err, shared.verbose);
    } else if (command == "game") {
      status = cmd_game(game, shared.seed, report, err, shared.verbose);
    } else {
      status = cmd_katetov(katetov, report, err, shared.verbose);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n" << sub->help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error(e.code()) ? 2 : 1;
  }

  const std::string text = report.dump(2) + "\n";
  if (shared.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(shared.out_path);
    if (!file) {
      err << "error: cannot write '" << shared.out_path << "'\n";
      return 2;
    }
    file << text;
  }
  return status;
}

}  // namespace hlbench::cli
