#include "eqg/weingarten.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace eqg {

namespace {

RatMatrix gramEntries(const std::vector<SetPartition>& basis, int N) {
    const int n = static_cast<int>(basis.size());
    RatMatrix g(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Rat v = Rat(intPow(Int(N), static_cast<unsigned>(joinBlockCount(basis[static_cast<size_t>(a)], basis[static_cast<size_t>(b)]))));
            g.at(a, b) = v;
            g.at(b, a) = v;
        }
    return g;
}

} // namespace

const WeingartenData& weingartenData(const Family& f, const Word& word, int N) {
    static std::map<std::tuple<std::string, std::string, int>, WeingartenData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(f.name(), wordToString(word), N);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    WeingartenData data;
    data.basis = enumerateFamily(f, Word{}, word, f.pairingsOnly() ? 16 : kDefaultLegBound);
    data.gramMatrix = gramEntries(data.basis, N);
    if (!data.basis.empty()) data.weingarten = data.gramMatrix.generalizedInverse();
    return cache.emplace(std::move(key), std::move(data)).first->second;
}

PartitionIndexedMatrix gram(const Family& f, const Word& word, int N) {
    if (N < 1) throw DomainError("gram: N must be positive");
    const WeingartenData& d = weingartenData(f, word, N);
    return PartitionIndexedMatrix{f, word, N, d.basis, d.gramMatrix};
}

PartitionIndexedMatrix weingartenMatrix(const Family& f, const Word& word, int N) {
    if (N < 1) throw DomainError("weingarten: N must be positive");
    const WeingartenData& d = weingartenData(f, word, N);
    return PartitionIndexedMatrix{f, word, N, d.basis, d.weingarten};
}

Rat gramDeterminant(int k, int N) {
    return gram(Family{Family::Tag::P, 1}, plainWord(k), N).entries.determinant();
}

Rat lindstromProduct(int k, int N) {
    Rat prod = 1;
    forEachMember(Family{Family::Tag::P, 1}, Word{}, plainWord(k), [&](const SetPartition& pi) {
        prod *= Rat(fallingFactorial(Int(N), static_cast<unsigned>(pi.blockCount())));
    });
    return prod;
}

namespace {

void checkMonomial(const Family& f, const Monomial& m) {
    if (m.i.size() != m.word.size() || m.j.size() != m.word.size())
        throw DomainError("monomial indices must match the word length");
    if (f.colored() && !isColored(m.word))
        throw DomainError("family " + f.name() + " requires a colored monomial word");
}

} // namespace

Rat integrate(const Family& f, int N, const Monomial& m) {
    checkMonomial(f, m);
    const WeingartenData& d = weingartenData(f, m.word, N);
    const int n = static_cast<int>(d.basis.size());
    std::vector<char> di(static_cast<size_t>(n)), dj(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        di[static_cast<size_t>(a)] = static_cast<char>(deltaSymbol(d.basis[static_cast<size_t>(a)], {}, m.i));
        dj[static_cast<size_t>(a)] = static_cast<char>(deltaSymbol(d.basis[static_cast<size_t>(a)], {}, m.j));
    }
    Rat sum = 0;
    for (int a = 0; a < n; ++a) {
        if (!di[static_cast<size_t>(a)]) continue;
        for (int b = 0; b < n; ++b)
            if (dj[static_cast<size_t>(b)]) sum += d.weingarten.at(a, b);
    }
    return sum;
}

Rat integrateTwisted(const Family& f, int N, const Monomial& m) {
    checkMonomial(f, m);
    const WeingartenData& d = weingartenData(f, m.word, N);
    const int n = static_cast<int>(d.basis.size());
    auto twisted = [&](const std::vector<int>& idx) {
        std::vector<int> signs(static_cast<size_t>(n));
        SetPartition ker(Word{}, m.word, idx);
        for (int a = 0; a < n; ++a)
            signs[static_cast<size_t>(a)] = leq(d.basis[static_cast<size_t>(a)], ker) ? signature(ker) : 0;
        return signs;
    };
    std::vector<int> di = twisted(m.i), dj = twisted(m.j);
    Rat sum = 0;
    for (int a = 0; a < n; ++a) {
        if (di[static_cast<size_t>(a)] == 0) continue;
        for (int b = 0; b < n; ++b)
            if (dj[static_cast<size_t>(b)] != 0)
                sum += Rat(di[static_cast<size_t>(a)] * dj[static_cast<size_t>(b)]) * d.weingarten.at(a, b);
    }
    return sum;
}

Rat symmetricGroupOracle(int N, const Monomial& m, OraclePath path) {
    if (m.i.size() != m.word.size() || m.j.size() != m.word.size())
        throw DomainError("monomial indices must match the word length");
    if (m.word.empty()) return 1;
    if (path == OraclePath::Formula) {
        SetPartition keri = kernel(m.i), kerj = kernel(m.j);
        if (!(keri == kerj)) return 0;
        return Rat(fallingFactorial(Int(N) - keri.blockCount(), static_cast<unsigned>(N - keri.blockCount()))) /
               Rat(factorial(static_cast<unsigned>(N)));
    }
    if (N > 8) throw SizeLimitError("brute-force symmetric group oracle limited to N <= 8");
    std::vector<int> perm(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) perm[static_cast<size_t>(i)] = i + 1;
    Int hits = 0, total = 0;
    do {
        ++total;
        bool ok = true;
        for (size_t a = 0; a < m.word.size() && ok; ++a)
            ok = perm[static_cast<size_t>(m.j[a] - 1)] == m.i[a];
        if (ok) ++hits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rat(hits) / Rat(total);
}

Rat hyperoctahedralOracle(int N, const Monomial& m) {
    if (m.i.size() != m.word.size() || m.j.size() != m.word.size())
        throw DomainError("monomial indices must match the word length");
    if (N > 4) throw SizeLimitError("hyperoctahedral oracle limited to N <= 4");
    std::vector<int> perm(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) perm[static_cast<size_t>(i)] = i + 1;
    Int sum = 0, total = 0;
    do {
        for (unsigned mask = 0; mask < (1u << N); ++mask) {
            ++total;
            int prod = 1;
            for (size_t a = 0; a < m.word.size() && prod != 0; ++a) {
                int col = m.j[a];
                if (perm[static_cast<size_t>(col - 1)] != m.i[a]) prod = 0;
                else if (mask & (1u << (col - 1))) prod = -prod;
            }
            sum += prod;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rat(sum) / Rat(total);
}

Rat truncatedCharMoments(const Family& f, int N, int s, const Word& word) {
    if (s > N) throw DomainError("truncated character needs s <= N");
    const WeingartenData& d = weingartenData(f, word, N);
    RatMatrix gs = gramEntries(d.basis, s);
    return (d.weingarten * gs).trace();
}

Rat truncatedCharMoments(const Family& f, int N, int s, int k) {
    return truncatedCharMoments(f, N, s, plainWord(k));
}

Rat partialIsometryIntegrate(const Family& f, int L, int M, int N, const Monomial& m) {
    checkMonomial(f, m);
    if (L > std::min(M, N)) throw DomainError("partial isometry spaces need L <= min(M,N)");
    const WeingartenData& dM = weingartenData(f, m.word, M);
    const WeingartenData& dN = weingartenData(f, m.word, N);
    const int n = static_cast<int>(dM.basis.size());
    std::vector<char> di(static_cast<size_t>(n)), dj(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        di[static_cast<size_t>(a)] = static_cast<char>(deltaSymbol(dM.basis[static_cast<size_t>(a)], {}, m.i));
        dj[static_cast<size_t>(a)] = static_cast<char>(deltaSymbol(dN.basis[static_cast<size_t>(a)], {}, m.j));
    }
    RatMatrix joinPow(n, n);
    for (int p = 0; p < n; ++p)
        for (int t = 0; t < n; ++t)
            joinPow.at(p, t) = Rat(intPow(Int(L), static_cast<unsigned>(joinBlockCount(dM.basis[static_cast<size_t>(p)], dM.basis[static_cast<size_t>(t)]))));
    Rat sum = 0;
    for (int p = 0; p < n; ++p) {
        Rat wi = 0;
        for (int a = 0; a < n; ++a)
            if (di[static_cast<size_t>(a)]) wi += dM.weingarten.at(p, a);
        if (wi == 0) continue;
        for (int t = 0; t < n; ++t) {
            Rat wj = 0;
            for (int b = 0; b < n; ++b)
                if (dj[static_cast<size_t>(b)]) wj += dN.weingarten.at(t, b);
            if (wj == 0) continue;
            sum += joinPow.at(p, t) * wi * wj;
        }
    }
    return sum;
}

Rat chiEMoments(const Family& f, int K, int L, int M, int N, const Word& word) {
    if (K > std::min(M, N)) throw DomainError("chi_E needs K <= min(M,N)");
    const WeingartenData& dM = weingartenData(f, word, M);
    const WeingartenData& dN = weingartenData(f, word, N);
    const int n = static_cast<int>(dM.basis.size());
    Rat sum = 0;
    for (int p = 0; p < n; ++p)
        for (int t = 0; t < n; ++t) {
            Rat kPow = Rat(intPow(Int(K), static_cast<unsigned>(joinBlockCount(dM.basis[static_cast<size_t>(p)], dM.basis[static_cast<size_t>(t)]))));
            Rat inner = 0;
            for (int s2 = 0; s2 < n; ++s2)
                for (int v = 0; v < n; ++v) {
                    Rat lPow = Rat(intPow(Int(L), static_cast<unsigned>(joinBlockCount(dM.basis[static_cast<size_t>(s2)], dM.basis[static_cast<size_t>(v)]))));
                    inner += lPow * dM.weingarten.at(p, s2) * dN.weingarten.at(t, v);
                }
            sum += kPow * inner;
        }
    return sum;
}

Rat chiEMoments(const Family& f, int K, int L, int M, int N, int s) {
    return chiEMoments(f, K, L, M, N, plainWord(s));
}

} // namespace eqg
