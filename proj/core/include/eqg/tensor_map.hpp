#pragma once

#include <string>

#include "eqg/partition.hpp"
#include "eqg/rat_matrix.hpp"

namespace eqg {

// Linear map (C^N)^(tensor k) -> (C^N)^(tensor l) with exact entries,
// stored as an N^l x N^k matrix. Input legs follow the partition's upper row,
// output legs its lower row.
class TensorMap {
public:
    TensorMap() = default;
    TensorMap(int N, int inLegs, int outLegs);

    int N() const { return N_; }
    int inLegs() const { return k_; }
    int outLegs() const { return l_; }
    const RatMatrix& matrix() const { return m_; }
    RatMatrix& matrix() { return m_; }

    Rat& at(const std::vector<int>& jOut, const std::vector<int>& iIn);
    const Rat& at(const std::vector<int>& jOut, const std::vector<int>& iIn) const;

    bool operator==(const TensorMap& o) const {
        return N_ == o.N_ && k_ == o.k_ && l_ == o.l_ && m_ == o.m_;
    }

    TensorMap scaled(const Rat& c) const;
    Rat trace() const;

    static constexpr std::uint64_t kEntryCeiling = 10'000'000;

private:
    int N_ = 1, k_ = 0, l_ = 0;
    RatMatrix m_;
};

TensorMap tpi(const SetPartition& pi, int N);
TensorMap tpiTwisted(const SetPartition& pi, int N);

TensorMap tensorProduct(const TensorMap& a, const TensorMap& b);
// Map composition a after b (b feeds into a).
TensorMap mapCompose(const TensorMap& a, const TensorMap& b);
TensorMap adjoint(const TensorMap& a);

struct CategoricalReport {
    bool tensorOk = false;
    bool composeChecked = false;
    bool composeOk = false;
    int loops = 0;
    bool involutionOk = false;
    bool pass() const { return tensorOk && involutionOk && (!composeChecked || composeOk); }
};

CategoricalReport categoricalCheck(const SetPartition& pi, const SetPartition& sigma, int N);

} // namespace eqg
