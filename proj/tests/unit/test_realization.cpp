#include "helpers.hpp"

#include "qweyl/errors.hpp"
#include "qweyl/realization.hpp"

using namespace qweyl;
using qweyl::test::qpow;

namespace {

Element act(const Realization& r, Chevalley g, int i, const MultiIndex& beta) {
    return apply(r.generator(g, i), beta);
}

} // namespace

TEST_CASE("cartan matrix") {
    const CartanMatrix a(3);
    CHECK(a(1, 1) == 2);
    CHECK(a(1, 2) == -1);
    CHECK(a(2, 1) == -1);
    CHECK(a(1, 3) == 0);
    CHECK(a.size() == 3);
}

TEST_CASE("worked actions for sl_3") {
    const auto r = build_realization(2);
    CHECK(r.rank_sl() == 3);
    CHECK(act(r, Chevalley::E, 2, {1, 1}) ==
          Element::monomial({1, 2}, q_int(2) * q_int(2)));
    CHECK(act(r, Chevalley::F, 2, {1, 1}) == Element::monomial({1, 0}, -1));
    CHECK(act(r, Chevalley::E, 2, {0, 0}).is_zero());
    CHECK(act(r, Chevalley::F, 1, {1, 0}) == Element::monomial({0, 1}));
    CHECK(act(r, Chevalley::K, 2, {1, 1}) == Element::monomial({1, 1}, qpow(3)));
    CHECK(act(r, Chevalley::E, 1, {1, 1}) == Element::monomial({2, 0}, q_int(2)));
    CHECK(act(r, Chevalley::KInv, 1, {3, 1}) == Element::monomial({3, 1}, qpow(-2)));
    CHECK_THROWS_AS(r.generator(Chevalley::E, 3), InvalidIndex);
    CHECK_THROWS_AS(build_realization(0), Error);
}

TEST_CASE("weight sum telescopes to [|beta|]") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& beta : monomials_up_to(n, 6)) {
            CHECK(weight_sum(beta) == q_int(beta.degree()));
        }
    }
}

TEST_CASE("word actions agree with closed forms") {
    for (int n = 1; n <= 3; ++n) {
        const auto r = build_realization(n);
        for (const auto& beta : monomials_up_to(static_cast<std::size_t>(n), 5)) {
            for (int i = 1; i <= n; ++i) {
                for (auto g : {Chevalley::E, Chevalley::F, Chevalley::K, Chevalley::KInv}) {
                    CHECK(act(r, g, i, beta) == closed_form_action(g, i, beta));
                }
            }
        }
        CHECK(oracle_check(n, 5).passed());
    }
}

TEST_CASE("sl_2 commutator acts by [2 beta]") {
    const auto r = build_realization(1);
    const auto comm = r.e[0] * r.f[0] - r.f[0] * r.e[0];
    for (int b = 0; b <= 8; ++b) {
        CHECK(apply(comm, MultiIndex{b}) == Element::monomial({b}, q_int(2 * b)));
    }
}

TEST_CASE("Serre relations") {
    CHECK(verify_serre(1, 6).passed());
    const auto r2 = verify_serre(2, 5);
    CHECK(r2.passed());
    CHECK(r2.find("R1:i=1,j=2") != nullptr);
}

TEST_CASE("gl relations") {
    CHECK(verify_gl(2, 5).passed());
    CHECK(verify_gl(3, 4).passed());
}

TEST_CASE("weight sum shift invariance") {
    CHECK(lemma21_check(2, 5).passed());
    CHECK(lemma21_check(3, 5).passed());
    CHECK(lemma21_check(1, 5).relations.empty());
}

TEST_CASE("classical degeneration") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(classical_degeneration_check(n, 5).passed());
    }
}

TEST_CASE("corrupted generators are detected") {
    SUBCASE("Theta factor dropped from e_n") {
        auto r = build_realization(2);
        Operator broken(2);
        for (const auto& [w, c] : r.e[1].terms()) {
            Word stripped;
            for (const auto& g : w) {
                if (g.kind != GenKind::Theta) {
                    stripped.push_back(g);
                }
            }
            broken.add_term(stripped, c);
        }
        REQUIRE(broken != r.e[1]);
        r.e[1] = broken;
        const auto report = verify_serre(r, 4);
        CHECK_FALSE(report.passed());
    }
    SUBCASE("sign flipped on f_n") {
        auto r = build_realization(1);
        r.f[0] = -r.f[0];
        CHECK_FALSE(verify_serre(r, 4).passed());
        CHECK_FALSE(classical_degeneration_check(r, 4).passed());
    }
    SUBCASE("sigma dropped from e_1") {
        auto r = build_realization(2);
        r.e[0] = Operator::word(2, Word{GenSymbol::x(1), GenSymbol::d(2)});
        const auto report = verify_serre(r, 4);
        CHECK_FALSE(report.passed());
        bool has_counterexample = false;
        for (const auto& rel : report.relations) {
            has_counterexample = has_counterexample || rel.counterexample.has_value();
        }
        CHECK(has_counterexample);
    }
}
