#include <doctest.h>

#include "eqg/diagram.hpp"
#include "eqg/serialize.hpp"
#include "eqg/tensor_map.hpp"

using namespace eqg;

namespace {

SetPartition pt(const std::string& text) { return parsePartitionText(text); }

} // namespace

TEST_CASE("composition glues middles and counts erased loops") {
    // cap after cup: a single closed circle around the identity-free middle
    auto cup = pt("/-- [[1,2]]");  // no upper legs, lower pair
    auto cap = pt("--/ [[1,2]]");  // upper pair, no lower legs
    CompositionResult circle = compose(cup, cap);
    CHECK(circle.loops == 1);
    CHECK(circle.partition.legs() == 0);

    // the snake relation: (cap tensor id) after (id tensor cup) = identity
    auto id = pt("-/- [[1,2]]");
    CompositionResult snake = compose(tensor(id, cup), tensor(cap, id));
    CHECK(snake.loops == 0);
    CHECK(snake.partition == id);
}

TEST_CASE("involution and tensor behave functorially") {
    auto pi = pt("--/---- [[1,3],[2,4,5],[6]]");
    CHECK(involute(involute(pi)) == pi);
    // rows swap and colors complement, matching the adjoint on maps
    CHECK(involute(pt("o/o [[1,2]]")) == pt("b/b [[1,2]]"));
    CHECK(involute(pt("ob/ [[1,2]]")) == pt("/bo [[1,2]]"));
    auto tau = pt("/-- [[1,2]]");
    CHECK(tensor(tensor(pi, tau), tau) == tensor(pi, tensor(tau, tau)));
}

TEST_CASE("rotation has order k+l and complements the corner colors") {
    auto pi = pt("ob/bo [[1,4],[2,3]]");
    SetPartition cur = pi;
    for (int i = 0; i < pi.legs(); ++i) cur = rotate(cur);
    CHECK(cur == pi);
    // rotating the colored identity flips both corner-crossing legs
    auto id = pt("o/o [[1,2]]");
    CHECK(rotate(id) == pt("b/b [[1,2]]"));
    CHECK(rotate(rotate(id)) == id);
    // one-row rotation is a cyclic shift (wrap-around legs flip twice)
    auto row = pt("/ob [[1],[2]]");
    CHECK(rotate(row) == pt("/bo [[1],[2]]"));
}

TEST_CASE("generated categories recover the classical families") {
    // The two-row semicircle generators alone close onto noncrossing pairings.
    auto cup = pt("/-- [[1,2]]");
    GeneratedCategory nc2 = generateCategory({cup}, 6);
    Family fNC2{Family::Tag::NC2};
    Family fP2{Family::Tag::P2};
    for (int k = 2; k <= 6; k += 2) {
        const auto* cell = nc2.cell(Word{}, plainWord(k));
        size_t expect = static_cast<size_t>(countFamily(fNC2, Word{}, plainWord(k)));
        CHECK((cell ? cell->size() : 0) == expect);
    }
    // Adding the crossing closes onto all pairings.
    auto crossing = pt("/---- [[1,3],[2,4]]");
    GeneratedCategory p2 = generateCategory({cup, crossing}, 6);
    const auto* cell4 = p2.cell(Word{}, plainWord(4));
    REQUIRE(cell4 != nullptr);
    CHECK(cell4->size() == countFamily(fP2, Word{}, plainWord(4)));
    for (const auto& [key, members] : p2.members)
        for (const auto& pi : members) CHECK(isMember(fP2, pi));
    // Adding the singleton-pair fork closes onto all partitions.
    auto fork = pt("/--- [[1,2,3]]");
    auto singleton = pt("/- [[1]]");
    GeneratedCategory p = generateCategory({cup, crossing, fork, singleton}, 6);
    const auto* pcell = p.cell(Word{}, plainWord(4));
    REQUIRE(pcell != nullptr);
    CHECK(pcell->size() == countFamily(Family{Family::Tag::P}, Word{}, plainWord(4)));
}

TEST_CASE("Temperley-Lieb traces count closure loops") {
    auto id2 = pt("--/-- [[1,3],[2,4]]");
    auto cupcap = pt("--/-- [[1,2],[3,4]]");
    for (int N = 2; N <= 4; ++N) {
        CHECK(tlTrace(id2, N) == Int(N) * N);
        CHECK(tlTrace(cupcap, N) == Int(N));
        // trace of the linear map agrees with the loop count
        CHECK(Rat(tlTrace(id2, N)) == tpi(id2, N).trace());
        CHECK(Rat(tlTrace(cupcap, N)) == tpi(cupcap, N).trace());
    }
}

TEST_CASE("partition maps satisfy the categorical identities") {
    auto pi = pt("--/-- [[1,2],[3,4]]");
    auto sigma = pt("--/-- [[1,3],[2,4]]");
    for (int N = 2; N <= 3; ++N) {
        CategoricalReport rep = categoricalCheck(pi, sigma, N);
        CHECK(rep.tensorOk);
        CHECK(rep.involutionOk);
        CHECK(rep.composeChecked);
        CHECK(rep.composeOk);
    }
    // composing a cup against a cap produces the loop factor N
    auto cup = pt("/-- [[1,2]]");
    auto cap = pt("--/ [[1,2]]");
    for (int N = 2; N <= 4; ++N) {
        TensorMap circle = mapCompose(tpi(cap, N), tpi(cup, N));
        CHECK(circle.trace() == N);
    }
}

TEST_CASE("loop counts match the trace factorization on pairings") {
    // Tr(T_pi T_sigma) = N^{c(pi,sigma)} * tlTrace(compose(pi,sigma)) on NC2(2,2)
    Family f{Family::Tag::NC2};
    auto cell = enumerateFamily(f, plainWord(2), plainWord(2));
    for (const auto& pi : cell)
        for (const auto& sigma : cell)
            for (int N = 2; N <= 4; ++N) {
                CompositionResult comp = compose(pi, sigma);
                Rat lhs = mapCompose(tpi(sigma, N), tpi(pi, N)).trace();
                Rat rhs = Rat(intPow(Int(N), static_cast<unsigned>(comp.loops)) *
                              tlTrace(comp.partition, N));
                CHECK(lhs == rhs);
            }
}
