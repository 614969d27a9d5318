#include "eqg/tensor_map.hpp"

#include "eqg/diagram.hpp"

#include <cmath>

namespace eqg {

namespace {

std::uint64_t powU(int base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<std::uint64_t>(base);
    return r;
}

int packIndex(const std::vector<int>& idx, int N) {
    int flat = 0;
    for (int v : idx) {
        if (v < 1 || v > N) throw DomainError("tensor index out of range");
        flat = flat * N + (v - 1);
    }
    return flat;
}

std::vector<int> unpackIndex(int flat, int N, int legs) {
    std::vector<int> idx(static_cast<size_t>(legs));
    for (int p = legs - 1; p >= 0; --p) {
        idx[static_cast<size_t>(p)] = flat % N + 1;
        flat /= N;
    }
    return idx;
}

} // namespace

TensorMap::TensorMap(int N, int inLegs, int outLegs) : N_(N), k_(inLegs), l_(outLegs) {
    if (N < 1) throw DomainError("tensor map needs N >= 1");
    if (powU(N, inLegs + outLegs) > kEntryCeiling)
        throw SizeLimitError("tensor map entry count exceeds ceiling");
    m_ = RatMatrix(static_cast<int>(powU(N, outLegs)), static_cast<int>(powU(N, inLegs)));
}

Rat& TensorMap::at(const std::vector<int>& jOut, const std::vector<int>& iIn) {
    return m_.at(packIndex(jOut, N_), packIndex(iIn, N_));
}

const Rat& TensorMap::at(const std::vector<int>& jOut, const std::vector<int>& iIn) const {
    return m_.at(packIndex(jOut, N_), packIndex(iIn, N_));
}

TensorMap TensorMap::scaled(const Rat& c) const {
    TensorMap r = *this;
    for (int i = 0; i < r.m_.rows(); ++i)
        for (int j = 0; j < r.m_.cols(); ++j) r.m_.at(i, j) *= c;
    return r;
}

Rat TensorMap::trace() const { return m_.trace(); }

TensorMap tpi(const SetPartition& pi, int N) {
    TensorMap t(N, pi.upperSize(), pi.lowerSize());
    const int rows = t.matrix().rows(), cols = t.matrix().cols();
    for (int r = 0; r < rows; ++r) {
        std::vector<int> j = unpackIndex(r, N, pi.lowerSize());
        for (int c = 0; c < cols; ++c) {
            std::vector<int> i = unpackIndex(c, N, pi.upperSize());
            t.matrix().at(r, c) = deltaSymbol(pi, i, j);
        }
    }
    return t;
}

TensorMap tpiTwisted(const SetPartition& pi, int N) {
    for (const auto& b : pi.blocks())
        if (b.size() % 2 != 0) throw DomainError("twisted map requires even blocks");
    TensorMap t(N, pi.upperSize(), pi.lowerSize());
    const int rows = t.matrix().rows(), cols = t.matrix().cols();
    for (int r = 0; r < rows; ++r) {
        std::vector<int> j = unpackIndex(r, N, pi.lowerSize());
        for (int c = 0; c < cols; ++c) {
            std::vector<int> i = unpackIndex(c, N, pi.upperSize());
            std::vector<int> labels = i;
            labels.insert(labels.end(), j.begin(), j.end());
            SetPartition ker(pi.upper(), pi.lower(), labels);
            if (leq(pi, ker)) t.matrix().at(r, c) = signature(ker);
        }
    }
    return t;
}

TensorMap tensorProduct(const TensorMap& a, const TensorMap& b) {
    if (a.N() != b.N()) throw DomainError("tensor product: mismatched N");
    TensorMap r(a.N(), a.inLegs() + b.inLegs(), a.outLegs() + b.outLegs());
    const int bi = b.matrix().cols(), bo = b.matrix().rows();
    for (int ra = 0; ra < a.matrix().rows(); ++ra)
        for (int ca = 0; ca < a.matrix().cols(); ++ca) {
            const Rat& va = a.matrix().at(ra, ca);
            if (va == 0) continue;
            for (int rb = 0; rb < bo; ++rb)
                for (int cb = 0; cb < bi; ++cb) {
                    const Rat& vb = b.matrix().at(rb, cb);
                    if (vb == 0) continue;
                    r.matrix().at(ra * bo + rb, ca * bi + cb) = va * vb;
                }
        }
    return r;
}

TensorMap mapCompose(const TensorMap& a, const TensorMap& b) {
    if (a.N() != b.N() || a.inLegs() != b.outLegs())
        throw DomainError("map composition: shape mismatch");
    TensorMap r(a.N(), b.inLegs(), a.outLegs());
    r.matrix() = a.matrix() * b.matrix();
    return r;
}

TensorMap adjoint(const TensorMap& a) {
    TensorMap r(a.N(), a.outLegs(), a.inLegs());
    r.matrix() = a.matrix().transpose();
    return r;
}

CategoricalReport categoricalCheck(const SetPartition& pi, const SetPartition& sigma, int N) {
    CategoricalReport rep;
    TensorMap tp = tpi(pi, N), ts = tpi(sigma, N);
    rep.tensorOk = tensorProduct(tp, ts) == tpi(tensor(pi, sigma), N);
    rep.involutionOk = adjoint(tp) == tpi(involute(pi), N) && adjoint(ts) == tpi(involute(sigma), N);
    if (pi.lower() == sigma.upper()) {
        rep.composeChecked = true;
        CompositionResult comp = compose(pi, sigma);
        rep.loops = comp.loops;
        Rat factor = ratPow(Rat(N), static_cast<unsigned>(comp.loops));
        rep.composeOk = mapCompose(ts, tp) == tpi(comp.partition, N).scaled(factor);
    }
    return rep;
}

} // namespace eqg
