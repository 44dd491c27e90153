#include "helpers.hpp"

#include "qweyl/errors.hpp"

#include <bit>

using namespace qweyl;
using qweyl::test::L;
using qweyl::test::qpow;

namespace {

// Gaussian binomial by counting inversions of 0/1 words with b ones:
// [a over b] = q^(-b(a-b)) * sum over words of q^(2 inv).
LaurentPoly binom_by_inversions(int a, int b) {
    LaurentPoly total;
    for (unsigned mask = 0; mask < (1u << a); ++mask) {
        if (std::popcount(mask) != b) {
            continue;
        }
        int inv = 0;
        for (int s = 0; s < a; ++s) {
            for (int t = 0; t < s; ++t) {
                if ((mask >> s & 1u) && !(mask >> t & 1u)) {
                    ++inv;
                }
            }
        }
        total += qpow(2 * inv);
    }
    return total.shifted(-b * (a - b));
}

BigInt classical_binom(int a, int b) {
    BigInt r = 1;
    for (int k = 1; k <= b; ++k) {
        r = r * (a - b + k) / k;
    }
    return r;
}

} // namespace

TEST_CASE("addition") {
    CHECK(qpow(1) + qpow(-1) == L({{1, 1}, {-1, 1}}));
    const auto p = L({{3, 2}, {-1, -4}});
    CHECK(p + LaurentPoly() == p);
    CHECK((L({{1, 1}, {-1, -1}}) + L({{-1, 1}, {1, -1}})).is_zero());
    CHECK(add(p, p) == L({{3, 4}, {-1, -8}}));
}

TEST_CASE("multiplication") {
    CHECK(qpow(1) * qpow(-1) == LaurentPoly(1));
    CHECK(L({{1, 1}, {-1, 1}}) * q_minus_q_inv() == L({{2, 1}, {-2, -1}}));
    CHECK((L({{5, 3}}) * LaurentPoly()).is_zero());
    CHECK(mul(L({{1, 1}, {0, 1}}), L({{1, 1}, {0, -1}})) == L({{2, 1}, {0, -1}}));
}

TEST_CASE("canonical form drops zero coefficients") {
    const auto p = LaurentPoly::from_terms({{2, 1}, {2, -1}, {0, 3}});
    CHECK(p == LaurentPoly(3));
    CHECK(p.size() == 1);
    CHECK(p.coeff(2) == 0);
    CHECK(LaurentPoly::monomial(4, 0).is_zero());
}

TEST_CASE("exact division") {
    CHECK(exact_div(L({{2, 1}, {-2, -1}}), q_minus_q_inv()) == L({{1, 1}, {-1, 1}}));
    CHECK(exact_div(LaurentPoly(), q_minus_q_inv()).is_zero());
    CHECK_THROWS_AS(exact_div(L({{1, 1}, {0, 1}}), q_minus_q_inv()), NotDivisible);
    CHECK_THROWS_AS(exact_div(qpow(1), LaurentPoly()), InvalidArgs);
    CHECK(exact_div(qpow(7), qpow(3)) == qpow(4));
}

TEST_CASE("exact division round-trips on random products") {
    qweyl::test::Rng rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = qweyl::test::random_poly(rng, 6);
        auto d = qweyl::test::random_poly(rng, 4);
        if (d.is_zero()) {
            d = qpow(1);
        }
        CHECK(exact_div(a * d, d) == a);
    }
}

TEST_CASE("quantum integers") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == LaurentPoly(1));
    CHECK(q_int(3) == L({{2, 1}, {0, 1}, {-2, 1}}));
    CHECK(q_int(3) == exact_div(L({{3, 1}, {-3, -1}}), q_minus_q_inv()));
    CHECK(q_int(-4) == -q_int(4));
    for (int m = -8; m <= 8; ++m) {
        CHECK(eval_at_one(q_int(m)) == m);
        CHECK(bar(q_int(m)) == q_int(m));
        // [m+1] = q[m] + q^-m
        CHECK(q_int(m + 1) == q_int(m).shifted(1) + qpow(-m));
        // (q - q^-1)[m] = q^m - q^-m
        CHECK(q_minus_q_inv() * q_int(m) == qpow(m) - qpow(-m));
    }
}

TEST_CASE("quantum factorials") {
    CHECK(q_fact(0) == LaurentPoly(1));
    CHECK(q_fact(2) == L({{1, 1}, {-1, 1}}));
    CHECK(q_fact(3) == q_int(2) * q_int(3));
    CHECK(eval_at_one(q_fact(6)) == 720);
}

TEST_CASE("gaussian binomials") {
    CHECK(q_binom(5, 0) == LaurentPoly(1));
    CHECK(q_binom(2, 1) == L({{1, 1}, {-1, 1}}));
    CHECK(q_binom(4, 2) == L({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
    CHECK(eval_at_one(q_binom(4, 2)) == 6);
}

TEST_CASE("gaussian binomials against two independent constructions") {
    for (int a = 0; a <= 12; ++a) {
        for (int b = 0; b <= a; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            const auto g = q_binom(a, b);
            CHECK(g == exact_div(q_fact(a), q_fact(b) * q_fact(a - b)));
            if (a <= 10) {
                CHECK(g == binom_by_inversions(a, b));
            }
            CHECK(eval_at_one(g) == classical_binom(a, b));
            CHECK(bar(g) == g);
            for (const auto& [e, c] : g.terms()) {
                CHECK(c > 0);
            }
        }
    }
}

TEST_CASE("bar involution") {
    CHECK(bar(qpow(2)) == qpow(-2));
    qweyl::test::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = qweyl::test::random_poly(rng, 5);
        const auto b = qweyl::test::random_poly(rng, 5);
        CHECK(bar(bar(a)) == a);
        CHECK(bar(a * b) == bar(a) * bar(b));
        CHECK(bar(a + b) == bar(a) + bar(b));
        CHECK(eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b));
    }
}

TEST_CASE("big coefficients") {
    auto p = LaurentPoly(1);
    for (int k = 0; k < 40; ++k) {
        p = p * L({{1, 1}, {0, 3}, {-1, 1}});
    }
    CHECK(eval_at_one(p) == boost::multiprecision::pow(BigInt(5), 40));
    CHECK(exact_div(p, L({{1, 1}, {0, 3}, {-1, 1}})) * L({{1, 1}, {0, 3}, {-1, 1}}) == p);
}

TEST_CASE("printing") {
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(to_string(L({{2, 1}, {0, 2}, {-2, 1}})) == "q^2+2+q^-2");
    CHECK(to_string(L({{1, -1}, {-1, 1}})) == "-q+q^-1");
    CHECK(to_string(L({{1, 3}})) == "3q");
}
