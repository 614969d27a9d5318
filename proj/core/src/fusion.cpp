#include "eqg/fusion.hpp"

#include <algorithm>

namespace eqg {

std::string FusionLabel::str() const {
    if (family == FusionFamily::UPlus) return "r[" + wordToString(word) + "]";
    return "r" + std::to_string(k);
}

namespace {

Word reverseBar(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (Color& c : r) c = complement(c);
    return r;
}

} // namespace

Decomposition fuse(const FusionLabel& a, const FusionLabel& b) {
    if (a.family != b.family) throw DomainError("fuse: labels from different families");
    Decomposition out;
    switch (a.family) {
        case FusionFamily::OPlus:
            for (int m = std::abs(a.k - b.k); m <= a.k + b.k; m += 2)
                out[FusionLabel{a.family, m, {}}] += 1;
            break;
        case FusionFamily::SPlus:
            for (int m = std::abs(a.k - b.k); m <= a.k + b.k; ++m)
                out[FusionLabel{a.family, m, {}}] += 1;
            break;
        case FusionFamily::UPlus: {
            // r_x y (x) r_ybar z = sum over shared middle words y.
            const Word& u = a.word;
            const Word& v = b.word;
            for (size_t cut = 0; cut <= u.size() && cut <= v.size(); ++cut) {
                // y = last cut letters of u; require v to start with reverseBar(y).
                Word y(u.end() - static_cast<long>(cut), u.end());
                Word ybar = reverseBar(y);
                if (!std::equal(ybar.begin(), ybar.end(), v.begin())) continue;
                Word xz(u.begin(), u.end() - static_cast<long>(cut));
                xz.insert(xz.end(), v.begin() + static_cast<long>(cut), v.end());
                out[FusionLabel{a.family, 0, std::move(xz)}] += 1;
            }
            break;
        }
    }
    return out;
}

Decomposition fuse(const Decomposition& a, const FusionLabel& b) {
    Decomposition out;
    for (const auto& [label, mult] : a)
        for (const auto& [label2, mult2] : fuse(label, b)) out[label2] += mult * mult2;
    return out;
}

Decomposition tensorPowerDecompose(FusionFamily family, int k) {
    if (family == FusionFamily::UPlus)
        throw DomainError("UPlus tensor powers are indexed by colored words");
    Decomposition acc;
    acc[FusionLabel{family, 0, {}}] = 1;
    for (int step = 0; step < k; ++step) {
        if (family == FusionFamily::OPlus) {
            acc = fuse(acc, FusionLabel{family, 1, {}});
        } else {
            // The fundamental magic representation splits as r0 + r1.
            Decomposition next = fuse(acc, FusionLabel{family, 1, {}});
            for (const auto& [label, mult] : acc) next[label] += mult;
            acc = next;
        }
    }
    return acc;
}

Decomposition tensorPowerDecompose(FusionFamily family, const Word& w) {
    if (family != FusionFamily::UPlus)
        throw DomainError("word-indexed tensor powers are for UPlus");
    if (!isColored(w)) throw DomainError("UPlus needs a fully colored word");
    Decomposition acc;
    acc[FusionLabel{family, 0, {}}] = 1;
    for (Color c : w) acc = fuse(acc, FusionLabel{family, 0, Word{c}});
    return acc;
}

namespace {

Int dimOPlus(int k, int N) {
    Int prev = 1, cur = N;
    if (k == 0) return prev;
    for (int j = 1; j < k; ++j) {
        Int next = Int(N) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Int dimSPlus(int k, int N) {
    if (N < 4) throw DomainError("SPlus dimensions need N >= 4");
    Int prev = 1, cur = N - 1;
    if (k == 0) return prev;
    for (int j = 1; j < k; ++j) {
        Int next = Int(N - 2) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Int dimUPlus(const Word& w, int N, std::map<Word, Int>& memo) {
    if (w.empty()) return 1;
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    // Peel the first letter c: N * dim(rest) = dim(c.rest) + [rest starts with cbar] dim(tail).
    Word rest(w.begin() + 1, w.end());
    Int value = Int(N) * dimUPlus(rest, N, memo);
    if (!rest.empty() && rest.front() == complement(w.front())) {
        Word tail(rest.begin() + 1, rest.end());
        value -= dimUPlus(tail, N, memo);
    }
    memo[w] = value;
    return value;
}

} // namespace

Int dimension(FusionFamily family, const FusionLabel& label, int N) {
    switch (family) {
        case FusionFamily::OPlus:
            if (N < 2) throw DomainError("OPlus dimensions need N >= 2");
            return dimOPlus(label.k, N);
        case FusionFamily::SPlus: return dimSPlus(label.k, N);
        case FusionFamily::UPlus: {
            if (N < 2) throw DomainError("UPlus dimensions need N >= 2");
            std::map<Word, Int> memo;
            return dimUPlus(label.word, N, memo);
        }
    }
    throw DomainError("unreachable fusion family");
}

Int dimension(FusionFamily family, int k, int N) {
    return dimension(family, FusionLabel{family, k, {}}, N);
}

Int catalan(int k) {
    Int c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

CatalanReport catalanConsistency(int kmax, int N) {
    CatalanReport rep;
    for (int k = 0; k <= kmax; ++k) {
        Decomposition d = tensorPowerDecompose(FusionFamily::OPlus, k);
        Int squares = 0;
        for (const auto& [label, mult] : d) {
            (void)label;
            squares += mult * mult;
        }
        if (squares != catalan(k)) {
            rep.pass = false;
            rep.failures.push_back("OPlus k=" + std::to_string(k) + ": sum of squares " +
                                   squares.str() + " != C_k " + catalan(k).str());
        }
        for (FusionFamily fam : {FusionFamily::OPlus, FusionFamily::SPlus}) {
            Int total = 0;
            for (const auto& [label, mult] : tensorPowerDecompose(fam, k))
                total += mult * dimension(fam, label, N);
            if (total != intPow(Int(N), static_cast<unsigned>(k))) {
                rep.pass = false;
                rep.failures.push_back("dimension bookkeeping failed at k=" + std::to_string(k));
            }
        }
    }
    return rep;
}

std::vector<Int> growthSeries(FusionFamily family, int N, int kmax) {
    std::vector<Int> b(static_cast<size_t>(kmax) + 1);
    if (family == FusionFamily::UPlus) {
        Int acc = 1; // empty word
        b[0] = acc;
        std::vector<Word> frontier{Word{}};
        for (int k = 1; k <= kmax; ++k) {
            std::vector<Word> next;
            for (const Word& w : frontier)
                for (Color c : {Color::White, Color::Black}) {
                    Word ext = w;
                    ext.push_back(c);
                    Int d = dimension(family, FusionLabel{family, 0, ext}, N);
                    acc += d * d;
                    next.push_back(std::move(ext));
                }
            frontier = std::move(next);
            b[static_cast<size_t>(k)] = acc;
        }
        return b;
    }
    Int acc = 0;
    for (int k = 0; k <= kmax; ++k) {
        Int d = dimension(family, k, N);
        acc += d * d;
        b[static_cast<size_t>(k)] = acc;
    }
    return b;
}

} // namespace eqg
