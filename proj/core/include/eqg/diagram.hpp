#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqg/partition.hpp"
#include "eqg/rational.hpp"

namespace eqg {

struct CompositionResult {
    SetPartition partition;
    int loops = 0; // closed middle components erased while gluing
};

SetPartition tensor(const SetPartition& pi, const SetPartition& sigma);
// Glues pi's lower row to sigma's upper row (words must match).
CompositionResult compose(const SetPartition& pi, const SetPartition& sigma);
SetPartition involute(const SetPartition& pi);
// One counterclockwise step along the boundary tour; the two legs crossing a
// corner (top-left -> bottom-left, bottom-right -> top-right) flip color.
SetPartition rotate(const SetPartition& pi);

struct GeneratedCategory {
    std::vector<SetPartition> generators;
    int sizeBound = 0;
    // canonical word-pair cell -> members in basis order
    std::map<std::pair<std::string, std::string>, std::vector<SetPartition>> members;

    const std::vector<SetPartition>* cell(const Word& upper, const Word& lower) const;
};

inline constexpr int kCategoryCeiling = 8;

GeneratedCategory generateCategory(const std::vector<SetPartition>& generators, int sizeBound,
                                   int ceiling = kCategoryCeiling);

// N^(number of loops of the closure of a pairing in NC2(k,k) or P2(k,k)).
Int tlTrace(const SetPartition& pi, int N);

} // namespace eqg
