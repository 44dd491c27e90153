#include "helpers.hpp"

#include "qweyl/errors.hpp"

using namespace qweyl;
using qweyl::test::qpow;

namespace {

Element random_element(qweyl::test::Rng& rng, std::size_t n, int max_degree) {
    Element e(n);
    const int count = rng.uniform(1, 3);
    for (int k = 0; k < count; ++k) {
        MultiIndex beta(n);
        int budget = rng.uniform(0, max_degree);
        for (std::size_t s = 0; s < n && budget > 0; ++s) {
            beta[s] = rng.uniform(0, budget);
            budget -= beta[s];
        }
        e.add_term(beta, qweyl::test::random_poly(rng, 2, 3));
    }
    return e;
}

} // namespace

TEST_CASE("monomial products") {
    CHECK(mul_monomial({1, 0}, {0, 1}) == Element::monomial({1, 1}));
    CHECK(mul_monomial({0, 1}, {1, 0}) == Element::monomial({1, 1}, qpow(1)));
    CHECK(mul_monomial({0, 0, 0}, {2, 1, 3}) == Element::monomial({2, 1, 3}));
    CHECK(mul_monomial({1}, {1}) == Element::monomial({2}, q_int(2)));
    CHECK(structure_constant({2, 1}, {1, 3}) ==
          qpow(star(MultiIndex{2, 1}, MultiIndex{1, 3})) * q_binom(3, 2) * q_binom(4, 1));
    CHECK_THROWS_AS(mul_monomial({1}, {1, 0}), RankMismatch);
}

TEST_CASE("bilinear product") {
    const Element a = Element::monomial({1, 0}) + Element::monomial({0, 1});
    const Element expected =
        Element::monomial({2, 0}, q_int(2)) + Element::monomial({1, 1}, qpow(1));
    CHECK(mul(a, Element::monomial({1, 0})) == expected);
    CHECK(mul(a, Element::scalar(2, 1)) == a);
    CHECK(mul(Element(2), a).is_zero());
}

TEST_CASE("x^(beta) is the divided power of the generators") {
    // x_1^k = [k]! x^(k) in one variable
    Element p = Element::scalar(1, 1);
    for (int k = 1; k <= 8; ++k) {
        p = mul(p, Element::monomial({1}));
        CHECK(p == Element::monomial({k}, q_fact(k)));
    }
    // x^(b1, b2) = x^(b1,0) x^(0,b2)
    for (int b1 = 0; b1 <= 4; ++b1) {
        for (int b2 = 0; b2 <= 4; ++b2) {
            CHECK(mul_monomial({b1, 0}, {0, b2}) == Element::monomial({b1, b2}));
        }
    }
}

TEST_CASE("associativity on small degrees") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto mons = monomials_up_to(n, 3);
        for (const auto& a : mons) {
            for (const auto& b : mons) {
                const auto ab = mul_monomial(a, b);
                for (const auto& c : mons) {
                    const auto lhs = mul(ab, Element::monomial(c));
                    const auto rhs = mul(Element::monomial(a), mul_monomial(b, c));
                    if (lhs != rhs) {
                        FAIL("associativity fails at " << to_string(a) << " " << to_string(b)
                                                       << " " << to_string(c));
                    }
                }
            }
        }
    }
}

TEST_CASE("theta reorders products") {
    // x^(a) x^(b) = theta(a, b) x^(b) x^(a)
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto mons = monomials_up_to(n, 3);
        for (const auto& a : mons) {
            for (const auto& b : mons) {
                CHECK(mul_monomial(a, b) == theta(a, b) * mul_monomial(b, a));
            }
        }
    }
}

TEST_CASE("bilinearity on random elements") {
    qweyl::test::Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto a = random_element(rng, n, 3);
        const auto b = random_element(rng, n, 3);
        const auto c = random_element(rng, n, 3);
        CHECK(mul(a + b, c) == mul(a, c) + mul(b, c));
        CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
}

TEST_CASE("monomial enumeration") {
    CHECK(monomials_up_to(1, 2) == std::vector<MultiIndex>{{0}, {1}, {2}});
    CHECK(monomials_up_to(2, 1) == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(monomials_up_to(3, 2).size() == 10);
    CHECK(monomials_up_to(3, 6).size() == 84);
    CHECK(monomials_up_to(2, 0) == std::vector<MultiIndex>{{0, 0}});
}

TEST_CASE("element validation and printing") {
    Element e(2);
    CHECK_THROWS_AS(e.add_term({-1, 0}, 1), Error);
    CHECK_THROWS_AS(e.add_term({1}, 1), RankMismatch);
    CHECK(to_expression(Element(2)) == "0");
    const Element x = Element::monomial({1, 2}, qweyl::test::L({{2, 1}, {0, 2}, {-2, 1}}));
    CHECK(to_expression(x) == "(q^2+2+q^-2) x^(1,2)");
    CHECK(to_expression(Element::monomial({1, 0}, -1)) == "-x^(1,0)");
    CHECK(to_expression(Element::monomial({1, 1}, qpow(3))) == "q^3 x^(1,1)");
}
