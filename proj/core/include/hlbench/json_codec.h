#pragma once

#include <nlohmann/json.hpp>

#include "hlbench/constructions.h"
#include "hlbench/game.h"
#include "hlbench/katetov.h"
#include "hlbench/search.h"

// JSON shapes shared by the CLI and the tests. Keys are emitted sorted;
// rationals are written as "p/q" strings and nodes as bit strings ("-" for
// the empty string).
namespace hlbench {

using Json = nlohmann::json;

// {"color_witness", "height", "leaf_images", "levels", "mode",
//  "split_nodes", "top_level"}
Json to_json(const HLCertificate& cert);
// Rebuilds the embedding from the leaf images; split nodes are checked
// against the meets. Errc::kParse on malformed input.
HLCertificate certificate_from_json(const Json& j);

Json to_json(const SearchResult& r);
Json to_json(const BandCheck& b);
Json to_json(const ZDensityBand& b);
// {"K", "flags", "horizon", "rounds": [{"I": [...], "k": n}], "window"}
Json to_json(const GameTranscript& t);
Json to_json(const MorphismReport& r);

Json nodes_json(const std::vector<BinaryString>& nodes);

}  // namespace hlbench
