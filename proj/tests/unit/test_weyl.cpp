#include "helpers.hpp"

#include "qweyl/errors.hpp"
#include "qweyl/random_ops.hpp"
#include "qweyl/weyl.hpp"

#include <random>

using namespace qweyl;
using qweyl::test::L;
using qweyl::test::qpow;

namespace {

Operator gen(std::size_t n, GenSymbol g) { return Operator::generator(n, std::move(g)); }

Element act(const GenSymbol& g, const MultiIndex& beta) {
    return apply(gen(beta.rank(), g), beta);
}

// Left multiplication by x^(alpha) after applying op.
Element left_mul(const MultiIndex& alpha, const Element& e) {
    return mul(Element::monomial(alpha), e);
}

} // namespace

TEST_CASE("generator actions") {
    CHECK(act(GenSymbol::d(2), {2, 1}) == Element::monomial({2, 0}, qpow(-2)));
    CHECK(act(GenSymbol::d(1), {0, 3}).is_zero());
    CHECK(act(GenSymbol::x(2), {1, 1}) == Element::monomial({1, 2}, qpow(1) * q_int(2)));
    CHECK(act(GenSymbol::sigma(2, -1), {1, 3}) == Element::monomial({1, 3}, qpow(-3)));
    CHECK(act(GenSymbol::theta({1, 0}), {0, 2}) == Element::monomial({0, 2}, qpow(-2)));
    // X(i) agrees with left multiplication by x^(eps_i)
    for (const auto& beta : monomials_up_to(3, 4)) {
        for (int i = 1; i <= 3; ++i) {
            CHECK(act(GenSymbol::x(i), beta) == mul_monomial(epsilon(3, i), beta));
        }
    }
}

TEST_CASE("word composition acts right to left") {
    const Word e1{GenSymbol::x(1), GenSymbol::d(2), GenSymbol::sigma(1)};
    CHECK(apply(Operator::word(2, e1), MultiIndex{1, 1}) ==
          Element::monomial({2, 0}, q_int(2)));
    const auto img = apply_word(e1, {1, 1});
    REQUIRE(img.has_value());
    CHECK(img->first == MultiIndex{2, 0});
    CHECK(img->second == q_int(2));
    CHECK_FALSE(apply_word(e1, {1, 0}).has_value());

    const Element e = Element::monomial({1, 1}, q_int(3)) + Element::monomial({0, 2});
    CHECK(apply(Operator::identity(2), e) == e);
    CHECK(apply(Operator(2), e).is_zero());
}

TEST_CASE("composition and brackets") {
    const auto a = gen(2, GenSymbol::x(1)) + L({{1, 2}}) * gen(2, GenSymbol::d(2));
    const auto b = gen(2, GenSymbol::sigma(1)) - gen(2, GenSymbol::x(2));
    CHECK(Operator::identity(2) * a == a);
    CHECK(a * Operator::identity(2) == a);
    CHECK(op_eq_up_to_degree(q_bracket(a, a, 1), Operator(2), 5));
    CHECK(op_eq_up_to_degree(q_bracket(Operator::identity(2), b, 1), Operator(2), 5));
    for (const auto& beta : monomials_up_to(2, 4)) {
        CHECK(apply(a * b, beta) == apply(a, apply(b, beta)));
    }
    CHECK_THROWS_AS(a * Operator::identity(3), RankMismatch);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(GenSymbol::x(0), 2), InvalidIndex);
    CHECK_THROWS_AS(validate(GenSymbol::d(3), 2), InvalidIndex);
    CHECK_THROWS_AS(validate(GenSymbol::sigma(1, 2), 2), Error);
    CHECK_THROWS_AS(validate(GenSymbol::theta({1}), 2), RankMismatch);
    Operator op(2);
    CHECK_THROWS(op.add_term(Word{GenSymbol::x(5)}, 1));
}

TEST_CASE("action equality") {
    const auto s12 = gen(2, GenSymbol::sigma(1)) * gen(2, GenSymbol::sigma(2));
    const auto s21 = gen(2, GenSymbol::sigma(2)) * gen(2, GenSymbol::sigma(1));
    CHECK(op_eq_up_to_degree(s12, s12, 6));
    CHECK(op_eq_up_to_degree(s12, s21, 6));

    for (std::size_t n = 1; n <= 3; ++n) {
        for (int i = 1; i <= static_cast<int>(n); ++i) {
            const auto xd = gen(n, GenSymbol::x(i)) * gen(n, GenSymbol::d(i));
            const OperatorQuotient quotient{
                gen(n, GenSymbol::sigma(i)) - gen(n, GenSymbol::sigma(i, -1)), q_minus_q_inv()};
            CHECK(op_eq_up_to_degree(xd, quotient, 6));
        }
    }

    const auto r = op_eq_up_to_degree(gen(1, GenSymbol::x(1)), gen(1, GenSymbol::sigma(1)), 3);
    CHECK_FALSE(r.equal);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->beta == MultiIndex{0});
}

TEST_CASE("theta of a simple root is sigma_i sigma_{i+1}") {
    for (std::size_t n = 2; n <= 3; ++n) {
        for (int i = 1; i < static_cast<int>(n); ++i) {
            const auto t = gen(n, GenSymbol::theta(epsilon(n, i + 1) - epsilon(n, i)));
            const auto ss = gen(n, GenSymbol::sigma(i)) * gen(n, GenSymbol::sigma(i + 1));
            CHECK(op_eq_up_to_degree(t, ss, 6));
        }
    }
}

TEST_CASE("twisted Leibniz law for d_i, both branches") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto mons = monomials_up_to(n, 3);
        for (int i = 1; i <= static_cast<int>(n); ++i) {
            const auto d = gen(n, GenSymbol::d(i));
            const auto tm = gen(n, GenSymbol::theta(-epsilon(n, i)));
            for (int sign : {1, -1}) {
                const auto left = tm * gen(n, GenSymbol::sigma(i, sign));
                const auto right = gen(n, GenSymbol::sigma(i, -sign));
                for (const auto& b : mons) {
                    for (const auto& c : mons) {
                        const auto lhs = apply(d, mul_monomial(b, c));
                        const auto rhs = mul(apply(d, b), apply(right, c)) +
                                         mul(apply(left, b), apply(d, c));
                        if (lhs != rhs) {
                            FAIL("d" << i << " sign " << sign << " at " << to_string(b) << ", "
                                     << to_string(c));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("twisted Leibniz law for x^(alpha) d_i, both branches") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto mons = monomials_up_to(n, 3);
        const auto alphas = monomials_up_to(n, 2);
        for (int i = 1; i <= static_cast<int>(n); ++i) {
            const auto d = gen(n, GenSymbol::d(i));
            for (const auto& alpha : alphas) {
                const auto t = gen(n, GenSymbol::theta(alpha - epsilon(n, i)));
                for (int sign : {1, -1}) {
                    const auto left = t * gen(n, GenSymbol::sigma(i, sign));
                    const auto right = gen(n, GenSymbol::sigma(i, -sign));
                    for (const auto& b : mons) {
                        for (const auto& c : mons) {
                            const auto lhs = left_mul(alpha, apply(d, mul_monomial(b, c)));
                            const auto rhs =
                                mul(left_mul(alpha, apply(d, b)), apply(right, c)) +
                                mul(apply(left, b), left_mul(alpha, apply(d, c)));
                            if (lhs != rhs) {
                                FAIL("x^" << to_string(alpha) << " d" << i << " sign " << sign
                                          << " at " << to_string(b) << ", " << to_string(c));
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("sigma and Theta are algebra automorphisms") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto mons = monomials_up_to(n, 3);
        std::vector<Operator> autos;
        for (int i = 1; i <= static_cast<int>(n); ++i) {
            autos.push_back(gen(n, GenSymbol::sigma(i)));
            autos.push_back(gen(n, GenSymbol::theta(epsilon(n, i))));
        }
        for (const auto& a : autos) {
            for (const auto& b : mons) {
                for (const auto& c : mons) {
                    CHECK(apply(a, mul_monomial(b, c)) == mul(apply(a, b), apply(a, c)));
                }
            }
        }
    }
}

TEST_CASE("degree grading") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto op = random_operator(rng, n, 5, 1);
        for (const auto& [w, c] : op.terms()) {
            for (const auto& beta : monomials_up_to(static_cast<std::size_t>(n), 4)) {
                const auto image = apply(Operator::word(n, w), beta);
                for (const auto& [gamma, coeff] : image.terms()) {
                    CHECK(gamma.degree() == beta.degree() + degree_shift(w));
                }
            }
        }
    }
}

TEST_CASE("normalize") {
    const Operator dx = gen(1, GenSymbol::d(1)) * gen(1, GenSymbol::x(1));
    const Operator expected = qpow(1) * (gen(1, GenSymbol::x(1)) * gen(1, GenSymbol::d(1))) +
                              gen(1, GenSymbol::sigma(1, -1));
    CHECK(normalize(dx) == expected);
    CHECK(to_expression(normalize(dx)) == "q x1 d1 + s1^-1");

    const Operator xd = gen(1, GenSymbol::x(1)) * gen(1, GenSymbol::d(1));
    CHECK(normalize(xd) == xd);

    const Operator x2x1 = gen(2, GenSymbol::x(2)) * gen(2, GenSymbol::x(1));
    const Operator nf = normalize(x2x1);
    CHECK(to_expression(nf) == "q x1 x2");
    CHECK(op_eq_up_to_degree(nf, x2x1, 5));

    const Operator tt = gen(2, GenSymbol::theta({1, 0})) * gen(2, GenSymbol::theta({-1, 0}));
    CHECK(normalize(tt) == Operator::identity(2));
    const Operator ss = gen(2, GenSymbol::sigma(1)) * gen(2, GenSymbol::sigma(1, -1));
    CHECK(normalize(ss) == Operator::identity(2));
}

TEST_CASE("normalize preserves action and is idempotent on random operators") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 3;
        const auto op = random_operator(rng, n, 5);
        const auto nf = normalize(op);
        CAPTURE(to_expression(op));
        CHECK(op_eq_up_to_degree(op, nf, 5).equal);
        CHECK(normalize(nf) == nf);
        for (const auto& [w, c] : nf.terms()) {
            CHECK(is_canonical(w));
        }
    }
}

TEST_CASE("defining relations hold") {
    for (int n = 1; n <= 2; ++n) {
        const auto report = verify_weyl_relations(n, 4);
        CHECK(report.passed());
        CHECK(report.relations.size() > 10);
    }
}

TEST_CASE("dropping the sigma term from d_i x_i is detected") {
    auto rules = RewriteSystem::standard();
    const RewriteRule* original = rules.find("dx_same");
    REQUIRE(original != nullptr);
    RewriteRule broken = *original;
    broken.rewrite = [](std::span<const GenSymbol> w) {
        return RewriteRule::Output{{qpow(1), Word{GenSymbol::x(w[1].index), GenSymbol::d(w[0].index)}}};
    };
    rules.replace(broken);
    const auto report = verify_weyl_relations(1, 4, rules);
    CHECK_FALSE(report.passed());
    bool has_counterexample = false;
    for (const auto& rel : report.relations) {
        has_counterexample = has_counterexample || rel.counterexample.has_value();
    }
    CHECK(has_counterexample);
}

TEST_CASE("printing") {
    CHECK(to_expression(Word{GenSymbol::x(1), GenSymbol::d(2), GenSymbol::sigma(1)}) == "x1 d2 s1");
    CHECK(to_expression(GenSymbol::theta({1, 0})) == "t(1,0)");
    CHECK(to_expression(Operator(2)) == "0");
    CHECK(to_expression(Operator::identity(2)) == "1");
}
