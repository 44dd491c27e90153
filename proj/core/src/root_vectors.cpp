#include "qweyl/root_vectors.hpp"

#include "qweyl/errors.hpp"
#include "qweyl/realization.hpp"

#include <string>

namespace qweyl {

namespace {

void check_root_indices(int i, int j, int n) {
    if (n < 1) {
        throw InvalidArgs("n must be >= 1");
    }
    if (i < 1 || j < 1 || i > n + 1 || j > n + 1 || i == j) {
        throw InvalidIndex("root index pair (" + std::to_string(i) + "," + std::to_string(j) +
                           ") invalid for n = " + std::to_string(n));
    }
}

} // namespace

Operator root_op(int i, int j, int n) {
    check_root_indices(i, j, n);
    using G = GenSymbol;
    const auto rank = static_cast<std::size_t>(n);
    if (i <= n && j <= n) {
        if (i < j) {
            return Operator::word(rank, {G::x(i), G::d(j), G::sigma(i, 1)});
        }
        return Operator::word(rank, {G::sigma(j, -1), G::x(i), G::d(j)});
    }
    if (j == n + 1) {
        Word prefix;
        for (int k = 1; k <= n; ++k) {
            if (k != i) {
                prefix.push_back(G::sigma(k, -1));
            }
        }
        Operator out(rank);
        for (int k = 1; k <= n; ++k) {
            Word w = prefix;
            w.insert(w.end(), {G::x(i), G::x(k), G::d(k), G::theta(epsilon(rank, k))});
            out.add_term(std::move(w), 1);
        }
        return out;
    }
    Word w{G::d(j)};
    for (int k = 1; k <= n; ++k) {
        if (k != j) {
            w.push_back(G::sigma(k, 1));
        }
    }
    return Operator::word(rank, std::move(w), -1);
}

Element closed_form_root_action(int i, int j, const MultiIndex& beta) {
    const int n = static_cast<int>(beta.rank());
    check_root_indices(i, j, n);
    if (!beta.is_nonnegative()) {
        throw InvalidArgs("closed_form_root_action: beta must be nonnegative");
    }
    auto b = [&](int k) { return beta[static_cast<std::size_t>(k - 1)]; };
    auto sum = [&](int from, int to) { // sum_{from <= k <= to} b_k
        int s = 0;
        for (int k = from; k <= to; ++k) {
            s += b(k);
        }
        return s;
    };
    auto eps = [&](int k) { return epsilon(beta.rank(), k); };
    Element out(beta.rank());
    auto emit = [&](const MultiIndex& target, const LaurentPoly& c) {
        if (target.is_nonnegative() && !c.is_zero()) {
            out.add_term(target, c);
        }
        return out;
    };

    if (i <= n && j <= n) {
        if (i < j) {
            return emit(beta + eps(i) - eps(j), q_int(b(i) + 1).shifted(-sum(i + 1, j - 1)));
        }
        return emit(beta - eps(j) + eps(i), q_int(b(i) + 1).shifted(sum(j + 1, i - 1)));
    }
    if (j == n + 1) {
        return emit(beta + eps(i),
                    (q_int(b(i) + 1) * weight_sum(beta)).shifted(-sum(i + 1, n)));
    }
    return emit(beta - eps(j), LaurentPoly::monomial(sum(j + 1, n), -1));
}

VerificationReport root_oracle_check(int n, int degree) {
    VerificationReport report;
    report.check = "root_oracle";
    report.n = n;
    report.rank_sl = n + 1;
    report.degree = degree;
    const auto monomials = monomials_up_to(static_cast<std::size_t>(n), degree);
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = 1; j <= n + 1; ++j) {
            if (i == j) {
                continue;
            }
            const Operator op = root_op(i, j, n);
            report.add("oracle:e" + std::to_string(i) + "," + std::to_string(j),
                       sweep_equal(
                           monomials, [&](const MultiIndex& b) { return apply(op, b); },
                           [&](const MultiIndex& b) { return closed_form_root_action(i, j, b); }));
        }
    }
    return report;
}

VerificationReport prop32_check(int n, int degree) {
    if (n < 2) {
        throw InvalidArgs("prop32_check needs n >= 2");
    }
    const auto rank = static_cast<std::size_t>(n);
    VerificationReport report;
    report.check = "prop32";
    report.n = n;
    report.rank_sl = n + 1;
    report.degree = degree;
    const auto monomials = monomials_up_to(rank, degree);
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly q_inv = LaurentPoly::monomial(-1);
    const Realization r = build_realization(n);

    auto op_action = [](const Operator& op) {
        return [&op](const MultiIndex& b) { return apply(op, b); };
    };
    auto check = [&](std::string id, const Operator& lhs, const Operator& rhs) {
        report.add(std::move(id), sweep_equal(monomials, op_action(lhs), op_action(rhs)));
    };
    auto sj = [](int s, int j) {
        return ":s=" + std::to_string(s) + ",j=" + std::to_string(j);
    };

    for (int s = 1; s < n; ++s) {
        const std::string ss = ":s=" + std::to_string(s);
        const Operator up = root_op(s, n + 1, n);
        const Operator down = root_op(n + 1, s, n);

        check("P1" + ss, up, q_bracket(root_op(s, s + 1, n), root_op(s + 1, n + 1, n), q));

        const Operator up_first = q_bracket(root_op(s, s + 1, n), root_op(s + 1, n + 1, n), q);
        const Operator down_first =
            q_bracket(root_op(n + 1, s + 1, n), root_op(s + 1, s, n), q_inv);
        for (int j = s + 1; j <= n; ++j) {
            const Operator up_j = q_bracket(root_op(s, j, n), root_op(j, n + 1, n), q);
            const Operator down_j = q_bracket(root_op(n + 1, j, n), root_op(j, s, n), q_inv);
            check("P2" + sj(s, j), up, up_j);
            check("P3" + sj(s, j), down, down_j);
            if (j > s + 1) {
                check("P2-indep" + sj(s, j), up_j, up_first);
                check("P3-indep" + sj(s, j), down_j, down_first);
            }
        }

        Word k_word;
        Word k_inv_word;
        for (int i = 1; i <= n; ++i) {
            k_word.push_back(GenSymbol::sigma(i, 1));
            k_inv_word.push_back(GenSymbol::sigma(i, -1));
        }
        k_word.push_back(GenSymbol::sigma(s, 1));
        k_inv_word.push_back(GenSymbol::sigma(s, -1));
        const Operator k = Operator::word(rank, k_word);
        const OperatorQuotient quotient{k - Operator::word(rank, k_inv_word), q_minus_q_inv()};

        report.add("P4" + ss,
                   sweep_equal(
                       monomials, op_action(up * down - down * up),
                       [&](const MultiIndex& b) { return apply(quotient, b); }));
        report.add("P4-eigen" + ss,
                   sweep_equal(
                       monomials, [&](const MultiIndex& b) { return apply(quotient, b); },
                       [&](const MultiIndex& b) {
                           return Element::monomial(
                               b, q_int(b[static_cast<std::size_t>(s - 1)] + b.degree()));
                       }));
        Operator k_product = Operator::identity(rank);
        for (int i = s; i <= n; ++i) {
            k_product = k_product * r.generator(Chevalley::K, i);
        }
        check("P4-K" + ss, k, k_product);
    }
    return report;
}

} // namespace qweyl
