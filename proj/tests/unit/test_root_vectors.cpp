#include "helpers.hpp"

#include "qweyl/errors.hpp"
#include "qweyl/realization.hpp"
#include "qweyl/root_vectors.hpp"

using namespace qweyl;
using qweyl::test::qpow;

TEST_CASE("worked root vector actions") {
    CHECK(apply(root_op(3, 1, 2), MultiIndex{1, 1}) == Element::monomial({0, 1}, -qpow(1)));
    CHECK(apply(root_op(1, 3, 3), MultiIndex{0, 2, 0}).is_zero());
    CHECK(apply(root_op(1, 3, 3), MultiIndex{1, 1, 1}) ==
          Element::monomial({2, 1, 0}, qpow(-1) * q_int(2)));
    CHECK(apply(root_op(1, 3, 2), MultiIndex{0, 0}).is_zero());
    CHECK(closed_form_root_action(3, 1, {1, 1}) == Element::monomial({0, 1}, -qpow(1)));
}

TEST_CASE("simple root vectors are the Chevalley generators") {
    for (int n = 1; n <= 3; ++n) {
        const auto r = build_realization(n);
        for (int i = 1; i <= n; ++i) {
            CHECK(op_eq_up_to_degree(root_op(i, i + 1, n), r.e[i - 1], 5));
            CHECK(op_eq_up_to_degree(root_op(i + 1, i, n), r.f[i - 1], 5));
        }
    }
}

TEST_CASE("word actions agree with closed forms") {
    for (int n = 1; n <= 3; ++n) {
        for (int i = 1; i <= n + 1; ++i) {
            for (int j = 1; j <= n + 1; ++j) {
                if (i == j) {
                    continue;
                }
                const auto op = root_op(i, j, n);
                for (const auto& beta : monomials_up_to(static_cast<std::size_t>(n), 5)) {
                    CHECK(apply(op, beta) == closed_form_root_action(i, j, beta));
                }
            }
        }
        CHECK(root_oracle_check(n, 5).passed());
    }
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS(root_op(1, 1, 2), InvalidIndex);
    CHECK_THROWS_AS(root_op(0, 2, 2), InvalidIndex);
    CHECK_THROWS_AS(root_op(1, 4, 2), InvalidIndex);
}

TEST_CASE("bracket descriptions through the extra variable") {
    const auto r2 = prop32_check(2, 5);
    CHECK(r2.passed());
    CHECK(r2.find("P1:s=1") != nullptr);
    const auto r3 = prop32_check(3, 4);
    CHECK(r3.passed());
    CHECK(r3.find("P2-indep:s=1,j=3") != nullptr);
    CHECK_THROWS(prop32_check(1, 4));
}

TEST_CASE("highest root bracket built by hand") {
    // e_{13} = [e_{12}, e_{23}]_q for n = 2 and e_{14} = [e_{12}, e_{24}]_q for n = 3
    CHECK(op_eq_up_to_degree(root_op(1, 3, 2),
                             q_bracket(root_op(1, 2, 2), root_op(2, 3, 2), qpow(1)), 5));
    CHECK(op_eq_up_to_degree(root_op(1, 4, 3),
                             q_bracket(root_op(1, 2, 3), root_op(2, 4, 3), qpow(1)), 4));
    CHECK(op_eq_up_to_degree(root_op(3, 1, 2),
                             q_bracket(root_op(3, 2, 2), root_op(2, 1, 2), qpow(-1)), 5));
}
