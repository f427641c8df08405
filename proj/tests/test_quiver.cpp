#include <doctest.h>

#include "ncgb/certify.hpp"
#include "ncgb/quiver.hpp"

using namespace ncgb;

namespace {

Polynomial P(const AlgebraPtr& alg, const char* src) { return parse_polynomial(src, alg); }

// the four operators on U, V, W: a: U->V, b: V->W, c: W->V, d: V->U
Quiver fig1(const AlgebraPtr& alg) {
    return Quiver(alg, {{"U", "V", alg->require("a")},
                        {"V", "W", alg->require("b")},
                        {"W", "V", alg->require("c")},
                        {"V", "U", alg->require("d")}});
}

}  // namespace

TEST_CASE("signatures compose right to left") {
    auto alg = Algebra::make({"a", "b", "c", "d"});
    Quiver q = fig1(alg);
    // a*d: first d: V->U, then a: U->V
    auto ad = q.signatures(Word({alg->require("a"), alg->require("d")}));
    REQUIRE(ad.size() == 1);
    CHECK(ad.count({"V", "V"}) == 1);
    // a*b: b lands in W but a needs U
    CHECK(q.signatures(Word({alg->require("a"), alg->require("b")})).empty());
    // the empty word is every identity
    auto loops = q.signatures(Word());
    CHECK(loops.size() == 3);
    CHECK(loops.count({"U", "U"}) == 1);
    CHECK(loops.count({"V", "V"}) == 1);
    CHECK(loops.count({"W", "W"}) == 1);
}

TEST_CASE("compatibility of sums needs a shared signature") {
    auto alg = Algebra::make({"a", "b", "c", "d"});
    Quiver q = fig1(alg);
    CHECK_FALSE(q.is_compatible(P(alg, "a*b + c*d")));
    CHECK(q.is_compatible(P(alg, "a*d + c*b")));
    CHECK(q.is_compatible(Polynomial::zero(alg)));
    // scalar multiples stay compatible
    CHECK(q.is_compatible(P(alg, "3*a*d + 3*c*b")));
    // a constant mixed with a non-loop monomial is flagged
    CHECK_FALSE(q.is_compatible(P(alg, "a + 1")));
    // a*d is a loop at V, so a constant can ride along
    CHECK(q.is_compatible(P(alg, "a*d + 1")));
}

TEST_CASE("composable signatures multiply") {
    auto alg = Algebra::make({"a", "b", "c", "d"});
    Quiver q = fig1(alg);
    auto cb = q.signatures(Word({alg->require("c"), alg->require("b")}));  // V -> V
    REQUIRE(cb.count({"V", "V"}) == 1);
    auto cbad = q.signatures(
        Word({alg->require("c"), alg->require("b"), alg->require("a"), alg->require("d")}));
    CHECK(cbad.count({"V", "V"}) == 1);
}

TEST_CASE("multigraph labels union their signatures") {
    auto alg = Algebra::make({"e"});
    Quiver q(alg, {{"U", "V", 0}, {"X", "Y", 0}});
    auto sigs = q.signatures(Word({0}));
    CHECK(sigs.size() == 2);
    CHECK(sigs.count({"U", "V"}) == 1);
    CHECK(sigs.count({"X", "Y"}) == 1);
}

TEST_CASE("certify rejects quiver-incompatible input with the session message") {
    auto alg = Algebra::make({"a", "b", "c", "d"});
    Quiver q = fig1(alg);
    CertifyOptions opts;
    opts.quiver = q;
    std::vector<Polynomial> assumptions = {P(alg, "a*d"), P(alg, "c*b")};
    // typo in the claim: c*b -> b*c
    try {
        certify(assumptions, P(alg, "a*d - b*c"), opts);
        FAIL("expected a quiver error");
    } catch (const QuiverError& e) {
        CHECK(std::string(e.what()).find("not compatible with the quiver") != std::string::npos);
        CHECK(std::string(e.what()).find("claim") != std::string::npos);
    }
    // compatible inputs go through the check
    CertifyReport ok = certify(assumptions, P(alg, "a*d - a*d"), opts);
    CHECK(ok.proved());
}
