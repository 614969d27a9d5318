#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqg/partition.hpp"
#include "eqg/rational.hpp"

namespace eqg {

enum class FusionFamily { OPlus, SPlus, UPlus };

// Irreducible label: an integer for OPlus/SPlus, a colored word for UPlus.
struct FusionLabel {
    FusionFamily family = FusionFamily::OPlus;
    int k = 0;
    Word word;

    bool operator<(const FusionLabel& o) const {
        if (family != o.family) return family < o.family;
        if (k != o.k) return k < o.k;
        return word < o.word;
    }
    bool operator==(const FusionLabel& o) const {
        return family == o.family && k == o.k && word == o.word;
    }
    std::string str() const;
};

using Decomposition = std::map<FusionLabel, Int>;

Decomposition fuse(const FusionLabel& a, const FusionLabel& b);
Decomposition fuse(const Decomposition& a, const FusionLabel& b);

Decomposition tensorPowerDecompose(FusionFamily family, int k);       // OPlus/SPlus
Decomposition tensorPowerDecompose(FusionFamily family, const Word& w); // UPlus

Int dimension(FusionFamily family, const FusionLabel& label, int N);
Int dimension(FusionFamily family, int k, int N);

struct CatalanReport {
    bool pass = true;
    std::vector<std::string> failures;
};
CatalanReport catalanConsistency(int kmax, int N = 5);

std::vector<Int> growthSeries(FusionFamily family, int N, int kmax);

Int catalan(int k);

} // namespace eqg
