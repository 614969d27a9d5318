#pragma once

#include <vector>

#include "eqg/partition.hpp"
#include "eqg/rat_matrix.hpp"
#include "eqg/rational.hpp"

namespace eqg {

struct PartitionIndexedMatrix {
    Family family;
    Word word;
    int N = 0;
    std::vector<SetPartition> basis; // canonical order: block count desc, then lex
    RatMatrix entries;
};

// One-row monomial u_{i1 j1}^{e1} ... u_{ik jk}^{ek}. White letters are plain
// factors, black letters conjugates; real families take plain (uncolored) words.
struct Monomial {
    Word word;
    std::vector<int> i, j; // 1-based row/column indices

    int degree() const { return static_cast<int>(word.size()); }
};

PartitionIndexedMatrix gram(const Family& f, const Word& word, int N);
PartitionIndexedMatrix weingartenMatrix(const Family& f, const Word& word, int N);

Rat gramDeterminant(int k, int N);   // family P, plain word of length k
Rat lindstromProduct(int k, int N);  // product over P(k) of N!/(N-|pi|)!

Rat integrate(const Family& f, int N, const Monomial& m);
Rat integrateTwisted(const Family& f, int N, const Monomial& m);

enum class OraclePath { Formula, BruteForce };
Rat symmetricGroupOracle(int N, const Monomial& m, OraclePath path = OraclePath::Formula);
Rat hyperoctahedralOracle(int N, const Monomial& m);

Rat truncatedCharMoments(const Family& f, int N, int s, int k);
Rat truncatedCharMoments(const Family& f, int N, int s, const Word& word);

Rat partialIsometryIntegrate(const Family& f, int L, int M, int N, const Monomial& m);
Rat chiEMoments(const Family& f, int K, int L, int M, int N, int s);
Rat chiEMoments(const Family& f, int K, int L, int M, int N, const Word& word);

// Shared cache of (basis, Gram, Weingarten) triples keyed by family/word/N.
struct WeingartenData {
    std::vector<SetPartition> basis;
    RatMatrix gramMatrix;
    RatMatrix weingarten;
};
const WeingartenData& weingartenData(const Family& f, const Word& word, int N);

} // namespace eqg
