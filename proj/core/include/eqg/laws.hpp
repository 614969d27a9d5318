#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "eqg/partition.hpp"
#include "eqg/poly.hpp"
#include "eqg/rational.hpp"

namespace eqg {

enum class CumulantMode { Classical, Free };

// Moment of the category law as a polynomial in t: sum over family members
// on the word of t^(block count).
Poly categoryMomentPoly(const Family& f, const Word& word);

struct LawSpec {
    enum class Kind {
        Gaussian, Semicircle, ComplexGaussian, Circular,
        Poisson, FreePoisson, Bessel, FreeBessel, CategoryLaw
    };
    Kind kind = Kind::Gaussian;
    Rat t = 1;
    int s = 1;                     // Bessel/FreeBessel order
    Family family{Family::Tag::P}; // CategoryLaw only

    Family momentFamily() const;
    bool wordIndexed() const;
    static LawSpec parse(const std::string& name, const Rat& t, int s);
};

Rat lawMoments(const LawSpec& spec, int order);
Rat lawMoments(const LawSpec& spec, const Word& word);

struct AtomicMeasure {
    struct Atom {
        Rat mass;
        Rat location;
    };
    struct RootAtom {
        Rat mass; // spread uniformly over the s-th roots of unity
        int s = 1;
    };
    std::vector<Atom> atoms;
    std::vector<RootAtom> rootAtoms;
};

Rat compoundCumulant(const AtomicMeasure& rho, int order);
Rat compoundMoments(const AtomicMeasure& rho, CumulantMode mode, int order);

Poly asymptoticCharMoments(const Family& f, int k);
Rat asymptoticCharMoments(const Family& f, const Rat& t, int k);

struct BPReport {
    bool pass = true;
    std::vector<std::string> failures;
};
BPReport bercoviciPataCheck(const Family& classicalFam, const Family& freeFam, int kmax);

// --- moment/cumulant conversion, shared by integer and word indexing ---

namespace detail {

inline size_t keyLength(int k) { return static_cast<size_t>(k); }
inline size_t keyLength(const Word& w) { return w.size(); }
inline Word keyWord(int k) { return plainWord(k); }
inline const Word& keyWord(const Word& w) { return w; }
inline int subKey(int, const std::vector<int>& block) { return static_cast<int>(block.size()); }
inline Word subKey(const Word& w, const std::vector<int>& block) {
    Word sub;
    sub.reserve(block.size());
    for (int leg : block) sub.push_back(w[static_cast<size_t>(leg - 1)]);
    return sub;
}

template <class S, class Key>
std::map<Key, S> momentsToCumulantsImpl(const std::map<Key, S>& moments, CumulantMode mode) {
    const Family fam{mode == CumulantMode::Classical ? Family::Tag::P : Family::Tag::NC};
    std::map<Key, S> kappa;
    std::vector<Key> keys;
    for (const auto& [k, v] : moments) {
        (void)v;
        keys.push_back(k);
    }
    // Every proper subkey is strictly shorter, so shortest-first suffices.
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        return keyLength(a) != keyLength(b) ? keyLength(a) < keyLength(b) : a < b;
    });
    for (const Key& w : keys) {
        S value = moments.at(w);
        forEachMember(fam, Word{}, keyWord(w), [&](const SetPartition& pi) {
            if (pi.blockCount() == 1) return; // the unknown cumulant itself
            S prod = S(1);
            for (const auto& block : pi.blocks()) prod = prod * kappa.at(subKey(w, block));
            value -= prod;
        });
        kappa[w] = value;
    }
    return kappa;
}

template <class S, class Key>
std::map<Key, S> cumulantsToMomentsImpl(const std::map<Key, S>& kappa, CumulantMode mode) {
    const Family fam{mode == CumulantMode::Classical ? Family::Tag::P : Family::Tag::NC};
    std::map<Key, S> moments;
    for (const auto& [w, v] : kappa) {
        (void)v;
        S total = S(0);
        forEachMember(fam, Word{}, keyWord(w), [&](const SetPartition& pi) {
            S prod = S(1);
            for (const auto& block : pi.blocks()) prod = prod * kappa.at(subKey(w, block));
            total += prod;
        });
        moments[w] = keyLength(w) == 0 ? S(1) : total;
    }
    return moments;
}

} // namespace detail

template <class S>
std::map<int, S> momentsToCumulants(const std::map<int, S>& moments, CumulantMode mode) {
    return detail::momentsToCumulantsImpl<S, int>(moments, mode);
}
template <class S>
std::map<int, S> cumulantsToMoments(const std::map<int, S>& cumulants, CumulantMode mode) {
    return detail::cumulantsToMomentsImpl<S, int>(cumulants, mode);
}
template <class S>
std::map<Word, S> momentsToCumulantsW(const std::map<Word, S>& moments, CumulantMode mode) {
    return detail::momentsToCumulantsImpl<S, Word>(moments, mode);
}
template <class S>
std::map<Word, S> cumulantsToMomentsW(const std::map<Word, S>& cumulants, CumulantMode mode) {
    return detail::cumulantsToMomentsImpl<S, Word>(cumulants, mode);
}

} // namespace eqg
