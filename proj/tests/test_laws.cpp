#include <doctest.h>

#include "eqg/laws.hpp"

using namespace eqg;

namespace {

LawSpec law(const std::string& name, const Rat& t = 1, int s = 1) {
    return LawSpec::parse(name, t, s);
}

} // namespace

TEST_CASE("classical limit laws have the expected moments") {
    // standard Gaussian: 1, 0, 3, 0, 15 at orders 2..6
    CHECK(lawMoments(law("Gaussian"), 1) == 0);
    CHECK(lawMoments(law("Gaussian"), 2) == 1);
    CHECK(lawMoments(law("Gaussian"), 4) == 3);
    CHECK(lawMoments(law("Gaussian"), 6) == 15);
    // Poisson(1): Bell numbers 1, 2, 5, 15
    CHECK(lawMoments(law("Poisson"), 1) == 1);
    CHECK(lawMoments(law("Poisson"), 2) == 2);
    CHECK(lawMoments(law("Poisson"), 3) == 5);
    CHECK(lawMoments(law("Poisson"), 4) == 15);
    // Poisson(t) second moment t + t^2
    CHECK(lawMoments(law("Poisson", Rat(1, 2)), 2) == Rat(3, 4));
}

TEST_CASE("free limit laws have Catalan-type moments") {
    CHECK(lawMoments(law("Semicircle"), 2) == 1);
    CHECK(lawMoments(law("Semicircle"), 4) == 2);
    CHECK(lawMoments(law("Semicircle"), 6) == 5);
    CHECK(lawMoments(law("Semicircle"), 8) == 14);
    CHECK(lawMoments(law("FreePoisson"), 3) == 5);
    CHECK(lawMoments(law("FreePoisson"), 4) == 14);
    // Marchenko-Pastur with t = 1/2: m2 = t + t^2
    CHECK(lawMoments(law("FreePoisson", Rat(1, 2)), 2) == Rat(3, 4));
}

TEST_CASE("colored laws are word indexed") {
    CHECK_THROWS_AS(lawMoments(law("ComplexGaussian"), 2), DomainError);
    CHECK(lawMoments(law("ComplexGaussian"), parseWord("ob")) == 1);
    CHECK(lawMoments(law("ComplexGaussian"), parseWord("oo")) == 0);
    CHECK(lawMoments(law("ComplexGaussian"), parseWord("oobb")) == 2);
    CHECK(lawMoments(law("Circular"), parseWord("oobb")) == 1);
    CHECK(lawMoments(law("Circular"), parseWord("obob")) == 2);
}

TEST_CASE("cumulants characterize the limit laws") {
    std::map<int, Rat> moments;
    for (int n = 1; n <= 6; ++n) moments[n] = lawMoments(law("Poisson", Rat(2, 3)), n);
    auto kappa = momentsToCumulants(moments, CumulantMode::Classical);
    for (int n = 1; n <= 6; ++n) CHECK(kappa.at(n) == Rat(2, 3));

    for (int n = 1; n <= 6; ++n) moments[n] = lawMoments(law("FreePoisson", Rat(2, 3)), n);
    kappa = momentsToCumulants(moments, CumulantMode::Free);
    for (int n = 1; n <= 6; ++n) CHECK(kappa.at(n) == Rat(2, 3));

    for (int n = 1; n <= 6; ++n) moments[n] = lawMoments(law("Gaussian", Rat(5)), n);
    kappa = momentsToCumulants(moments, CumulantMode::Classical);
    for (int n = 1; n <= 6; ++n) CHECK(kappa.at(n) == (n == 2 ? Rat(5) : Rat(0)));

    // the two conversions invert each other
    auto back = cumulantsToMoments(kappa, CumulantMode::Classical);
    for (int n = 1; n <= 6; ++n) CHECK(back.at(n) == moments.at(n));
}

TEST_CASE("Bessel laws agree with their compound-Poisson description") {
    for (int s = 1; s <= 3; ++s) {
        AtomicMeasure rho;
        rho.rootAtoms.push_back({Rat(3, 4), s});
        for (int n = 1; n <= 6; ++n) {
            CHECK(compoundMoments(rho, CumulantMode::Classical, n) ==
                  lawMoments(law("Bessel", Rat(3, 4), s), n));
            CHECK(compoundMoments(rho, CumulantMode::Free, n) ==
                  lawMoments(law("FreeBessel", Rat(3, 4), s), n));
        }
    }
    // point atoms: a compound Poisson with one atom at 1 is plain Poisson
    AtomicMeasure point;
    point.atoms.push_back({Rat(1, 2), Rat(1)});
    for (int n = 1; n <= 5; ++n)
        CHECK(compoundMoments(point, CumulantMode::Classical, n) ==
              lawMoments(law("Poisson", Rat(1, 2)), n));
}

TEST_CASE("asymptotic character moments are category sums") {
    // O-family: sum over pairings of t^(blocks); at t=1 the pairing count
    CHECK(asymptoticCharMoments(Family{Family::Tag::P2}, Rat(1), 4) == 3);
    CHECK(asymptoticCharMoments(Family{Family::Tag::P2}, Rat(1), 6) == 15);
    CHECK(asymptoticCharMoments(Family{Family::Tag::P}, Rat(1), 4) == 15);
    // polynomial structure in the truncation parameter
    Poly p = asymptoticCharMoments(Family{Family::Tag::P2}, 4);
    CHECK(p.coeff(2) == 3);
    CHECK(p.coeff(1) == 0);
}

TEST_CASE("classical and free cumulants agree across the liberation pairs") {
    CHECK(bercoviciPataCheck(Family{Family::Tag::P2}, Family{Family::Tag::NC2}, 6).pass);
    CHECK(bercoviciPataCheck(Family{Family::Tag::P}, Family{Family::Tag::NC}, 6).pass);
    CHECK(bercoviciPataCheck(Family{Family::Tag::MatchP2}, Family{Family::Tag::MatchNC2}, 5).pass);
    // a mismatched pair is detected
    CHECK_FALSE(bercoviciPataCheck(Family{Family::Tag::P2}, Family{Family::Tag::NC}, 6).pass);
    CHECK_THROWS_AS(bercoviciPataCheck(Family{Family::Tag::P2}, Family{Family::Tag::MatchNC2}, 4),
                    DomainError);
}
