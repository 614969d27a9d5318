#include "eqg/laws.hpp"

namespace eqg {

Poly categoryMomentPoly(const Family& f, const Word& word) {
    Poly p;
    forEachMember(f, Word{}, word, [&](const SetPartition& pi) {
        p += Poly::t(static_cast<unsigned>(pi.blockCount()));
    });
    return p;
}

Family LawSpec::momentFamily() const {
    switch (kind) {
        case Kind::Gaussian: return Family{Family::Tag::P2};
        case Kind::Semicircle: return Family{Family::Tag::NC2};
        case Kind::ComplexGaussian: return Family{Family::Tag::MatchP2};
        case Kind::Circular: return Family{Family::Tag::MatchNC2};
        case Kind::Poisson: return Family{Family::Tag::P};
        case Kind::FreePoisson: return Family{Family::Tag::NC};
        case Kind::Bessel: return Family{Family::Tag::Ps, s};
        case Kind::FreeBessel: return Family{Family::Tag::NCs, s};
        case Kind::CategoryLaw: return family;
    }
    throw DomainError("unreachable law kind");
}

bool LawSpec::wordIndexed() const { return momentFamily().colored(); }

LawSpec LawSpec::parse(const std::string& name, const Rat& t, int s) {
    LawSpec spec;
    spec.t = t;
    spec.s = s;
    if (name == "Gaussian") spec.kind = Kind::Gaussian;
    else if (name == "Semicircle") spec.kind = Kind::Semicircle;
    else if (name == "ComplexGaussian") spec.kind = Kind::ComplexGaussian;
    else if (name == "Circular") spec.kind = Kind::Circular;
    else if (name == "Poisson") spec.kind = Kind::Poisson;
    else if (name == "FreePoisson") spec.kind = Kind::FreePoisson;
    else if (name == "Bessel") spec.kind = Kind::Bessel;
    else if (name == "FreeBessel") spec.kind = Kind::FreeBessel;
    else {
        spec.kind = Kind::CategoryLaw;
        spec.family = Family::parse(name);
    }
    return spec;
}

Rat lawMoments(const LawSpec& spec, const Word& word) {
    return categoryMomentPoly(spec.momentFamily(), word).eval(spec.t);
}

Rat lawMoments(const LawSpec& spec, int order) {
    if (spec.wordIndexed())
        throw DomainError("this law indexes moments by colored words, not integers");
    return lawMoments(spec, plainWord(order));
}

Rat compoundCumulant(const AtomicMeasure& rho, int order) {
    if (order < 1) throw DomainError("cumulant order must be >= 1");
    Rat k = 0;
    for (const auto& atom : rho.atoms) k += atom.mass * ratPow(atom.location, static_cast<unsigned>(order));
    for (const auto& r : rho.rootAtoms)
        if (order % r.s == 0) k += r.mass;
    return k;
}

Rat compoundMoments(const AtomicMeasure& rho, CumulantMode mode, int order) {
    std::map<int, Rat> kappa;
    for (int n = 1; n <= order; ++n) kappa[n] = compoundCumulant(rho, n);
    if (order == 0) return 1;
    return cumulantsToMoments(kappa, mode).at(order);
}

Poly asymptoticCharMoments(const Family& f, int k) {
    return categoryMomentPoly(f, plainWord(k));
}

Rat asymptoticCharMoments(const Family& f, const Rat& t, int k) {
    return asymptoticCharMoments(f, k).eval(t);
}

namespace {

std::vector<Word> allWords(int length) {
    std::vector<Word> out;
    for (unsigned mask = 0; mask < (1u << length); ++mask) {
        Word w(static_cast<size_t>(length));
        for (int p = 0; p < length; ++p)
            w[static_cast<size_t>(p)] = (mask >> p) & 1u ? Color::Black : Color::White;
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace

BPReport bercoviciPataCheck(const Family& classicalFam, const Family& freeFam, int kmax) {
    BPReport rep;
    if (classicalFam.colored() != freeFam.colored())
        throw DomainError("bercoviciPataCheck: families disagree on coloring");
    if (classicalFam.colored()) {
        std::map<Word, Poly> mc, mf;
        for (int k = 0; k <= kmax; ++k)
            for (const Word& w : allWords(k)) {
                mc[w] = categoryMomentPoly(classicalFam, w);
                mf[w] = categoryMomentPoly(freeFam, w);
            }
        auto kc = momentsToCumulantsW(mc, CumulantMode::Classical);
        auto kf = momentsToCumulantsW(mf, CumulantMode::Free);
        for (const auto& [w, v] : kc) {
            if (!(v == kf.at(w))) {
                rep.pass = false;
                rep.failures.push_back("word " + wordToString(w) + ": classical " + v.str() +
                                       " vs free " + kf.at(w).str());
            }
        }
    } else {
        std::map<int, Poly> mc, mf;
        for (int k = 1; k <= kmax; ++k) {
            mc[k] = categoryMomentPoly(classicalFam, plainWord(k));
            mf[k] = categoryMomentPoly(freeFam, plainWord(k));
        }
        auto kc = momentsToCumulants(mc, CumulantMode::Classical);
        auto kf = momentsToCumulants(mf, CumulantMode::Free);
        for (const auto& [k, v] : kc) {
            if (!(v == kf.at(k))) {
                rep.pass = false;
                rep.failures.push_back("order " + std::to_string(k) + ": classical " + v.str() +
                                       " vs free " + kf.at(k).str());
            }
        }
    }
    return rep;
}

} // namespace eqg
