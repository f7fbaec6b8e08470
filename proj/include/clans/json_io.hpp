#pragma once

#include "json.hpp"

#include "clans/clan.hpp"
#include "clans/patterns.hpp"
#include "clans/springer.hpp"

namespace clans {

// Positions in every JSON document are 1-based.

/// {"kind": ..., "begin": b, "length": l, ...children}; "sign_position" on
/// sign_delete nodes, "left"/"right" on sign_delete, "blocks" on block_split,
/// "interior" on outer_strip.
nlohmann::json certificate_to_json(const Certificate& cert);

/// {clan, p, q, dimension, closed, rationally_smooth, witness_pattern?,
///  witness_positions?, certificate?}
nlohmann::json verdict_to_json(const Clan& clan, const SmoothnessVerdict& verdict);

/// {closed, gamma, budget, count, hits: [[i, j], ...]}
nlohmann::json witness_to_json(const ReflectionWitness& witness);

}  // namespace clans
