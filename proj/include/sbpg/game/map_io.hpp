#pragma once

#include <iosfwd>
#include <string>

#include "sbpg/game/maps.hpp"

namespace sbpg {

/// Writes one row per visited cell:
///   cell,idx_0..idx_{d-1},coord_0..coord_{d-1},action,utility,depth
/// Doubles are printed with round-trip precision.
void write_policy_csv(std::ostream& out, const PolicyTable& table);
void save_policy_csv(const std::string& path, const PolicyTable& table);

/// Reads a table written by write_policy_csv. The grid must match the one
/// the table was exported from (dimension from the header, indices in range,
/// coordinates equal to the support vectors).
PolicyTable read_policy_csv(std::istream& in, const SupportGrid& grid);
PolicyTable load_policy_csv(const std::string& path, const SupportGrid& grid);

}  // namespace sbpg
