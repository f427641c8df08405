#include <doctest.h>

#include <random>

#include "ncgb/freealg.hpp"
#include "ncgb/order.hpp"

using namespace ncgb;

namespace {

AlgebraPtr abc() { return Algebra::make({"a", "b", "c", "d"}); }

Word W(std::initializer_list<VarIndex> ls) { return Word(std::vector<VarIndex>(ls)); }

Polynomial P(const AlgebraPtr& alg, const char* src) { return parse_polynomial(src, alg); }

Polynomial random_poly(const AlgebraPtr& alg, std::mt19937& rng, int max_terms = 3,
                       int max_deg = 3) {
    std::uniform_int_distribution<int> dterms(0, max_terms);
    std::uniform_int_distribution<int> ddeg(0, max_deg);
    std::uniform_int_distribution<int> dvar(0, (int)alg->size() - 1);
    std::uniform_int_distribution<int> dcoef(-3, 3);
    std::vector<Term> ts;
    int n = dterms(rng);
    for (int i = 0; i < n; ++i) {
        Word w;
        int d = ddeg(rng);
        for (int j = 0; j < d; ++j) w.letters.push_back((VarIndex)dvar(rng));
        int c = dcoef(rng);
        if (c) ts.push_back(Term(Rational(c), std::move(w)));
    }
    return Polynomial(alg, std::move(ts));
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
    Rational a = Rational::from_string("2/3");
    Rational b = Rational::from_string("-5/6");
    CHECK((a + b).str() == "-1/6");
    CHECK((a * b).str() == "-5/9");
    CHECK((a - a).is_zero());
    CHECK((a / b).str() == "-4/5");
    CHECK(Rational::from_string("4/6") == a);

    BigInt big = BigInt::from_decimal("123456789012345678901234567890");
    CHECK(big.to_decimal() == "123456789012345678901234567890");
    CHECK((big * big % big).is_zero());
    CHECK((big + BigInt(1) - big).is_one());
    BigInt q = big / BigInt(1000000007);
    BigInt r = big % BigInt(1000000007);
    CHECK(q * BigInt(1000000007) + r == big);
    CHECK(BigInt::gcd(BigInt(12), BigInt(-18)).to_decimal() == "6");
}

TEST_CASE("addition cancels and keeps canonical form") {
    auto alg = abc();
    CHECK(P(alg, "a*b - d") + P(alg, "d") == P(alg, "a*b"));
    Polynomial p = P(alg, "a*b*a - 2*b");
    CHECK(p + Polynomial::zero(alg) == p);
    CHECK(P(alg, "a - b") + P(alg, "b - c") == P(alg, "a - c"));
}

TEST_CASE("multiplication is noncommutative concatenation") {
    auto alg = abc();
    CHECK(P(alg, "a + b") * P(alg, "a - b") == P(alg, "a^2 - a*b + b*a - b^2"));
    Polynomial p = P(alg, "3*a*b - c");
    CHECK(Polynomial::constant(alg, Rational(1)) * p == p);
    CHECK(P(alg, "b") * P(alg, "a*c*a - a") * P(alg, "b") ==
          P(alg, "b*a*c*a*b - b*a*b"));
}

TEST_CASE("ring axioms on random polynomials") {
    auto alg = abc();
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_poly(alg, rng), q = random_poly(alg, rng),
                   r = random_poly(alg, rng);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p + q == q + p);
        CHECK(p - p == Polynomial::zero(alg));
        CHECK(p * Polynomial::zero(alg) == Polynomial::zero(alg));
    }
}

TEST_CASE("adjoint reverses words through the pairing") {
    auto alg = Algebra::make({"a", "b", "c", "a_adj", "b_adj", "c_adj"});
    AdjointMap m = AdjointMap::by_suffix(alg);
    CHECK(adjoint(P(alg, "a*b - c"), m) == P(alg, "b_adj*a_adj - c_adj"));
    CHECK(adjoint(P(alg, "a_adj*b_adj*a_adj - a_adj"), m) == P(alg, "a*b*a - a"));

    std::mt19937 rng(11);
    for (int i = 0; i < 1000; ++i) {
        Polynomial p = random_poly(alg, rng), q = random_poly(alg, rng);
        CHECK(adjoint(adjoint(p, m), m) == p);
        CHECK(adjoint(p * q, m) == adjoint(q, m) * adjoint(p, m));
        CHECK(adjoint(p + q, m) == adjoint(p, m) + adjoint(q, m));
    }
}

TEST_CASE("pinv produces the four defining polynomials in order") {
    auto alg = Algebra::make({"a", "b", "a_adj", "b_adj"});
    auto F = pinv(alg, 0, 1, 2, 3);
    REQUIRE(F.size() == 4);
    CHECK(F[0] == P(alg, "a*b*a - a"));
    CHECK(F[1] == P(alg, "b*a*b - b"));
    CHECK(F[2] == P(alg, "b_adj*a_adj - a*b"));
    CHECK(F[3] == P(alg, "a_adj*b_adj - b*a"));

    auto self = pinv(alg, 0, 0, 2, 2);
    CHECK(self[0] == P(alg, "a^3 - a"));
    CHECK(self[1] == P(alg, "a^3 - a"));
    CHECK(self[2] == P(alg, "a_adj^2 - a^2"));
    CHECK(self[3] == P(alg, "a_adj^2 - a^2"));
}

TEST_CASE("add_adj appends adjoints and drops scalar multiples") {
    auto alg = Algebra::make({"a", "b", "a_adj", "b_adj", "x", "x_adj"});
    AdjointMap m = AdjointMap::by_suffix(alg);

    auto F = add_adj(pinv(alg, 0, 1, 2, 3), m);
    REQUIRE(F.size() == 6);
    CHECK(F[4] == P(alg, "a_adj*b_adj*a_adj - a_adj"));
    CHECK(F[5] == P(alg, "b_adj*a_adj*b_adj - b_adj"));

    CHECK(add_adj({}, m).empty());

    auto self = add_adj({P(alg, "x - x_adj")}, m);
    REQUIRE(self.size() == 1);
    // its adjoint is -(x - x_adj), a scalar multiple, so nothing is added
    CHECK(adjoint(self[0], m) == -self[0]);
}

TEST_CASE("parser handles the grammar and reports errors") {
    auto alg = abc();
    CHECK(P(alg, "b*a*b - b") ==
          Polynomial(alg, {Term(Rational(1), W({1, 0, 1})), Term(Rational(-1), W({1}))}));
    CHECK(P(alg, "b^3 - b") == P(alg, "b*b*b - b"));
    CHECK(P(alg, "a*b - 1").terms().back().word.empty());
    CHECK(P(alg, " a * b  -  1 ") == P(alg, "a*b-1"));
    CHECK(P(alg, "2/4*a") == P(alg, "1/2*a"));
    CHECK_THROWS_AS(P(alg, "a + e"), ParseError);
    CHECK_THROWS_AS(P(alg, "a ++ b"), ParseError);
    CHECK_THROWS_AS(P(alg, ""), ParseError);
    CHECK_THROWS_AS(P(alg, "a^"), ParseError);
}

TEST_CASE("format and parse round-trip") {
    auto alg = abc();
    std::mt19937 rng(23);
    for (int i = 0; i < 300; ++i) {
        Polynomial p = random_poly(alg, rng, 4, 4);
        CHECK(parse_polynomial(format_polynomial(p), alg) == p);
    }
    CHECK(format_polynomial(Polynomial::zero(alg)) == "0");
    CHECK(format_polynomial(P(alg, "-d + a*b*c")) == "-d + a*b*c");
}

TEST_CASE("mismatched algebras are rejected") {
    auto alg1 = abc();
    auto alg2 = Algebra::make({"x", "y"});
    CHECK_THROWS_AS(P(alg1, "a") + P(alg2, "x"), UsageError);
    CHECK_THROWS_AS(P(alg1, "a") * P(alg2, "x"), UsageError);
}
