#include "hlbench/json_codec.h"

#include "hlbench/error.h"

namespace hlbench {

Json nodes_json(const std::vector<BinaryString>& nodes) {
  Json out = Json::array();
  for (const auto& s : nodes) out.push_back(s.to_token());
  return out;
}

Json to_json(const HLCertificate& cert) {
  return Json{{"mode", mode_name(cert.mode)},
              {"height", cert.embedding.height()},
              {"top_level", cert.embedding.top_level()},
              {"split_nodes", nodes_json(cert.embedding.split_nodes())},
              {"leaf_images", nodes_json(cert.embedding.leaf_images())},
              {"levels", cert.levels.members()},
              {"color_witness", cert.color_witness}};
}

HLCertificate certificate_from_json(const Json& j) {
  try {
    HLCertificate cert;
    cert.mode = parse_mode(j.at("mode").get<std::string>());
    const int height = j.at("height").get<int>();
    std::vector<BinaryString> leaves;
    for (const auto& s : j.at("leaf_images")) leaves.push_back(BinaryString::parse(s.get<std::string>()));
    cert.embedding = TreeEmbedding::from_leaves(height, leaves);
    std::vector<BinaryString> split;
    for (const auto& s : j.at("split_nodes")) split.push_back(BinaryString::parse(s.get<std::string>()));
    if (split != cert.embedding.split_nodes()) {
      throw Error(Errc::kParse, "split_nodes are not the meets of the leaf images");
    }
    const int top = j.contains("top_level") ? j.at("top_level").get<int>() : cert.embedding.top_level();
    if (top != cert.embedding.top_level()) throw Error(Errc::kParse, "top_level disagrees with leaf_images");
    cert.levels = LevelSet(j.at("levels").get<std::vector<int>>(), top + 1);
    cert.color_witness = j.at("color_witness").get<std::vector<int>>();
    return cert;
  } catch (const Json::exception& e) {
    throw Error(Errc::kParse, std::string("certificate: ") + e.what());
  }
}

Json to_json(const SearchResult& r) {
  return Json{{"m", r.m},
              {"complete", r.complete},
              {"target_met", r.target_met},
              {"explored", r.explored},
              {"certificate", to_json(r.certificate)}};
}

Json to_json(const BandCheck& b) {
  return Json{{"n", b.n},
              {"selection", b.selection},
              {"expected", b.expected},
              {"actual", b.actual},
              {"pass", b.pass()}};
}

Json to_json(const ZDensityBand& b) {
  return Json{{"n", b.n},
              {"first_level", b.first_level},
              {"last_level", b.last_level},
              {"branches", nodes_json(b.branches)},
              {"assignments", b.assignments},
              {"bijection", b.is_bijection()}};
}

Json to_json(const GameTranscript& t) {
  Json rounds = Json::array();
  for (const auto& r : t.rounds) rounds.push_back(Json{{"I", r.move_one.members()}, {"k", r.move_two}});
  return Json{{"horizon", t.horizon},
              {"window", t.window},
              {"rounds", rounds},
              {"K", t.outcome.members()},
              {"flags",
               {{"completed", t.flags.completed},
                {"player_one_stuck", t.flags.player_one_stuck},
                {"player_two_exhausted", t.flags.player_two_exhausted},
                {"repeated_k", t.flags.repeated_k}}}};
}

Json to_json(const MorphismReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(Json{{"generator", v.generator},
                              {"label", v.label},
                              {"preimage_size", v.preimage_size},
                              {"value", v.value}});
  }
  return Json{{"pass", r.pass},
              {"surrogate", r.surrogate},
              {"parameters", r.parameters},
              {"generators_checked", r.generators_checked},
              {"violations", violations},
              {"scope", r.scope}};
}

}  // namespace hlbench
