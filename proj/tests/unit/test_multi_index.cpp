#include "helpers.hpp"

#include "qweyl/errors.hpp"

using namespace qweyl;
using qweyl::test::qpow;

namespace {

// Direct double sum, kept separate from the library loop.
int star_reference(const MultiIndex& a, const MultiIndex& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            s += a[i] * b[j];
        }
    }
    return s;
}

} // namespace

TEST_CASE("arithmetic and degree") {
    const MultiIndex a{1, 2, 3};
    const MultiIndex b{0, -1, 4};
    CHECK(a + b == MultiIndex{1, 1, 7});
    CHECK(a - b == MultiIndex{1, 3, -1});
    CHECK(2 * a == MultiIndex{2, 4, 6});
    CHECK(a.degree() == 6);
    CHECK(a.is_nonnegative());
    CHECK_FALSE(b.is_nonnegative());
    CHECK(MultiIndex(3).is_zero());
    CHECK(epsilon(3, 2) == MultiIndex{0, 1, 0});
    CHECK_THROWS_AS(epsilon(3, 4), Error);
    CHECK_THROWS_AS(check_rank(MultiIndex{1}, MultiIndex{1, 2}), RankMismatch);
    CHECK_THROWS_AS(MultiIndex({1}) + MultiIndex({1, 2}), RankMismatch);
}

TEST_CASE("star product") {
    CHECK(star(epsilon(3, 2), MultiIndex{4, 5, 6}) == 4);
    CHECK(star(epsilon(3, 3), MultiIndex{4, 5, 6}) == 9);
    CHECK(star(epsilon(3, 1), MultiIndex{4, 5, 6}) == 0);
    CHECK(star(MultiIndex{7, 8}, MultiIndex(2)) == 0);
    CHECK(star(MultiIndex{1, 2}, MultiIndex{3, 4}) == 6);
    CHECK_THROWS_AS(star(MultiIndex{1}, MultiIndex{1, 2}), RankMismatch);

    qweyl::test::Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto a = qweyl::test::random_index(rng, n, -4, 4);
        const auto b = qweyl::test::random_index(rng, n, -4, 4);
        const auto c = qweyl::test::random_index(rng, n, -4, 4);
        CHECK(star(a, b) == star_reference(a, b));
        CHECK(star(a + b, c) == star(a, c) + star(b, c));
        CHECK(star(a, b + c) == star(a, b) + star(a, c));
    }
}

TEST_CASE("theta on unit vectors") {
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const auto expected = i > j ? qpow(1) : i == j ? qpow(0) : qpow(-1);
            CHECK(theta(epsilon(3, i), epsilon(3, j)) == expected);
        }
    }
    CHECK(theta(MultiIndex{1, 2}, MultiIndex{3, 4}) == qpow(2));
}

TEST_CASE("theta bicharacter laws") {
    qweyl::test::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto a = qweyl::test::random_index(rng, n, -3, 3);
        const auto b = qweyl::test::random_index(rng, n, -3, 3);
        const auto c = qweyl::test::random_index(rng, n, -3, 3);
        CHECK(theta(a, a) == LaurentPoly(1));
        CHECK(theta(a, b) * theta(b, a) == LaurentPoly(1));
        CHECK(theta(a + b, c) == theta(a, c) * theta(b, c));
        CHECK(theta(a, b + c) == theta(a, b) * theta(a, c));
        CHECK(theta(-a, b) == bar(theta(a, b)));
        CHECK(theta_exponent(a, b) == star_reference(a, b) - star_reference(b, a));
    }
}

TEST_CASE("printing") {
    CHECK(to_string(MultiIndex{1, 0, 2}) == "(1,0,2)");
    CHECK(to_string(MultiIndex{-1}) == "(-1)");
}
