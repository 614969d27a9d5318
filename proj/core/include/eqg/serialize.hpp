#pragma once

#include <string>
#include <vector>

#include "eqg/partition.hpp"
#include "eqg/rational.hpp"

namespace eqg {

// Text form: color rows "upper/lower" over {o,b,-} followed by a block list
// over 1-based legs, upper first. Example: "ob/bo [[1,4],[2,3]]".
std::string blockListString(const SetPartition& pi);
std::string partitionToText(const SetPartition& pi);
SetPartition parsePartitionText(const std::string& text);

std::string ratToString(const Rat& r); // "p" or "p/q"
Rat parseRat(const std::string& s);

std::vector<int> parseIntList(const std::string& s); // comma separated

} // namespace eqg
