#pragma once

#include <json.hpp>

#include "glvar/equimap.hpp"
#include "glvar/groebner.hpp"
#include "glvar/partition.hpp"
#include "glvar/variety.hpp"

namespace glvar {

/// Insertion-ordered JSON so reports are byte-stable.
using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json tuple_to_json(const PartitionTuple& t);
PartitionTuple tuple_from_json(const Json& j);

/// {"vars": [...], "weights": [...], "gens": ["poly text", ...]};
/// weights optional on input.
Json ideal_to_json(const Ideal& I);
Ideal ideal_from_json(const Json& j);

/// {"source": [[1],[1],[2]], "target": [[4]], "bodies": [...]} with
/// optional "symbols", "target_symbols", "coeff_symbols". Source symbols
/// are auto-named x,y,.../f,g,... in declaration (array) order when not
/// given.
Json map_to_json(const WeightedMap& f);
WeightedMap map_from_json(const Json& j);

/// {"tuple": ..., "recipe": {"kind": "ambient"|"point"|"orbit"|"minors"|
/// "map_image", ...}} with optional "symbols" and "shift".
LevelFamily family_from_json(const Json& j);

/// Declaration-order symbols for a raw tuple-of-partitions JSON array.
std::vector<FormSymbol> symbols_from_json(const Json& tuple_json,
                                          const std::vector<std::string>& names);

} // namespace glvar
