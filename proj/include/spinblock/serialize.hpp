#pragma once

#include <string>

#include <json.hpp>

#include "spinblock/abacus.hpp"
#include "spinblock/compat.hpp"
#include "spinblock/crystal.hpp"
#include "spinblock/donovan.hpp"
#include "spinblock/lie.hpp"
#include "spinblock/partition.hpp"
#include "spinblock/scopes.hpp"

namespace spinblock {

inline constexpr const char* kSchema = "spinblock/1";

// nlohmann hooks; partitions serialize as plain integer arrays.
void to_json(nlohmann::json& j, const StrictPartition& x);
void to_json(nlohmann::json& j, const PStrictPartition& x);
void to_json(nlohmann::json& j, const Content& x);
void to_json(nlohmann::json& j, const Abacus& x);
void to_json(nlohmann::json& j, const CorePair& x);
void to_json(nlohmann::json& j, const CoreTuple& x);
void to_json(nlohmann::json& j, const BlockLabel& x);
void to_json(nlohmann::json& j, const BlockGraph& x);
void to_json(nlohmann::json& j, const NodePos& x);
void to_json(nlohmann::json& j, const NodeGroup& x);
void to_json(nlohmann::json& j, const AllowedStep& x);
void to_json(nlohmann::json& j, const AllowedComponent& x);
void to_json(nlohmann::json& j, const CompatibilityReport& x);
void to_json(nlohmann::json& j, const ReductionTrace& x);
void to_json(nlohmann::json& j, const Representative& x);
void to_json(nlohmann::json& j, const CartanData& x);
void to_json(nlohmann::json& j, const CoordVector& x);
void to_json(nlohmann::json& j, const LevelTable& x);

// Deterministic graphviz text: one vertex line per block, one edge line per
// residue edge, both in sorted order.
std::string dot_of(const BlockGraph& g);

// For t == 2 a plain matrix, rows n_1 = lo..hi; otherwise one
// "n_1,...,n_t,level" line per cell.
std::string csv_of(const LevelTable& t);

// "12,7,6,2,1" (empty string for the empty partition).
StrictPartition parse_strict_partition(const std::string& s);
PStrictPartition parse_p_strict_partition(const std::string& s, int p);
// "2:0,3:0"
CoreTuple parse_core_tuple(const std::string& s, int p);

} // namespace spinblock
