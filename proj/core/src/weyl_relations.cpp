#include "qweyl/errors.hpp"
#include "qweyl/weyl.hpp"

#include <string>

namespace qweyl {

namespace {

std::string ij(int i, int j) { return ":i=" + std::to_string(i) + ",j=" + std::to_string(j); }
std::string only_i(int i) { return ":i=" + std::to_string(i); }

class WeylChecker {
public:
    WeylChecker(int n, int degree, VerificationReport& report)
        : n_(static_cast<std::size_t>(n)), report_(report),
          monomials_(monomials_up_to(n_, degree)) {}

    Operator w(Word word, const LaurentPoly& c = 1) const {
        return Operator::word(n_, std::move(word), c);
    }
    Operator one() const { return Operator::identity(n_); }
    MultiIndex eps(int i) const { return epsilon(n_, i); }

    void equal(std::string id, const Operator& lhs, const Operator& rhs) {
        report_.add(std::move(id),
                    sweep_equal(
                        monomials_, [&](const MultiIndex& b) { return apply(lhs, b); },
                        [&](const MultiIndex& b) { return apply(rhs, b); }));
    }

    void equal(std::string id, const Operator& lhs, const OperatorQuotient& rhs) {
        report_.add(std::move(id),
                    sweep_equal(
                        monomials_, [&](const MultiIndex& b) { return apply(lhs, b); },
                        [&](const MultiIndex& b) { return apply(rhs, b); }));
    }

    // Each rule instance is checked against the action of its left-hand side.
    void rule_instances(const RewriteSystem& rules) {
        std::vector<GenSymbol> alphabet;
        for (int i = 1; i <= static_cast<int>(n_); ++i) {
            alphabet.push_back(GenSymbol::x(i));
            alphabet.push_back(GenSymbol::d(i));
            alphabet.push_back(GenSymbol::sigma(i, 1));
            alphabet.push_back(GenSymbol::sigma(i, -1));
            alphabet.push_back(GenSymbol::theta(eps(i)));
            alphabet.push_back(GenSymbol::theta(-eps(i)));
        }
        alphabet.push_back(GenSymbol::theta(MultiIndex(n_)));

        for (const auto& rule : rules.rules()) {
            std::vector<Word> windows;
            if (rule.arity == 1) {
                for (const auto& a : alphabet) {
                    windows.push_back({a});
                }
            } else {
                for (const auto& a : alphabet) {
                    for (const auto& b : alphabet) {
                        windows.push_back({a, b});
                    }
                }
            }
            for (const auto& win : windows) {
                if (!rule.matches(std::span<const GenSymbol>(win))) {
                    continue;
                }
                Operator rhs(n_);
                for (auto& [c, rw] : rule.rewrite(std::span<const GenSymbol>(win))) {
                    rhs.add_term(std::move(rw), c);
                }
                equal("rule:" + rule.name + ":" + to_expression(win), w(win), rhs);
            }
        }
    }

private:
    std::size_t n_;
    VerificationReport& report_;
    std::vector<MultiIndex> monomials_;
};

} // namespace

VerificationReport verify_weyl_relations(int n, int degree, const RewriteSystem& rules) {
    if (n < 1) {
        throw InvalidArgs("n must be >= 1");
    }
    if (degree < 0) {
        throw InvalidArgs("degree must be >= 0");
    }
    VerificationReport report;
    report.check = "weyl";
    report.n = n;
    report.rank_sl = n + 1;
    report.degree = degree;

    WeylChecker c(n, degree, report);
    using G = GenSymbol;
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly q_inv = LaurentPoly::monomial(-1);

    for (int i = 1; i <= n; ++i) {
        c.equal("theta_inverse" + only_i(i) + ",sign=+",
                c.w({G::theta(c.eps(i)), G::theta(-c.eps(i))}), c.one());
        c.equal("theta_inverse" + only_i(i) + ",sign=-",
                c.w({G::theta(-c.eps(i)), G::theta(c.eps(i))}), c.one());
        c.equal("sigma_inverse" + only_i(i) + ",sign=+", c.w({G::sigma(i, 1), G::sigma(i, -1)}),
                c.one());
        c.equal("sigma_inverse" + only_i(i) + ",sign=-", c.w({G::sigma(i, -1), G::sigma(i, 1)}),
                c.one());
    }
    for (int i = 1; i < n; ++i) {
        c.equal("theta_sigma_pair" + only_i(i), c.w({G::theta(c.eps(i + 1) - c.eps(i))}),
                c.w({G::sigma(i, 1), G::sigma(i + 1, 1)}));
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const auto id = ij(i, j);
            c.equal("theta_product" + id, c.w({G::theta(c.eps(i)), G::theta(c.eps(j))}),
                    c.w({G::theta(c.eps(i) + c.eps(j))}));
            c.equal("theta_commute" + id, c.w({G::theta(c.eps(i)), G::theta(c.eps(j))}),
                    c.w({G::theta(c.eps(j)), G::theta(c.eps(i))}));
            c.equal("sigma_commute" + id, c.w({G::sigma(i), G::sigma(j)}),
                    c.w({G::sigma(j), G::sigma(i)}));
            c.equal("sigma_theta_commute" + id, c.w({G::sigma(i), G::theta(c.eps(j))}),
                    c.w({G::theta(c.eps(j)), G::sigma(i)}));
            c.equal("theta_conj_x" + id,
                    c.w({G::theta(c.eps(i)), G::x(j), G::theta(-c.eps(i))}),
                    c.w({G::x(j)}, theta(c.eps(i), c.eps(j))));
            c.equal("theta_conj_d" + id,
                    c.w({G::theta(c.eps(i)), G::d(j), G::theta(-c.eps(i))}),
                    c.w({G::d(j)}, theta(c.eps(j), c.eps(i))));
            c.equal("sigma_conj_x" + id, c.w({G::sigma(i, 1), G::x(j), G::sigma(i, -1)}),
                    c.w({G::x(j)}, LaurentPoly::monomial(i == j ? 1 : 0)));
            c.equal("sigma_conj_d" + id, c.w({G::sigma(i, 1), G::d(j), G::sigma(i, -1)}),
                    c.w({G::d(j)}, LaurentPoly::monomial(i == j ? -1 : 0)));
            c.equal("xx" + id, c.w({G::x(i), G::x(j)}),
                    c.w({G::x(j), G::x(i)}, theta(c.eps(i), c.eps(j))));
            c.equal("dd" + id, c.w({G::d(i), G::d(j)}),
                    c.w({G::d(j), G::d(i)}, theta(c.eps(i), c.eps(j))));
            if (i != j) {
                c.equal("dx" + id, c.w({G::d(i), G::x(j)}),
                        c.w({G::x(j), G::d(i)}, theta(c.eps(j), c.eps(i))));
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        const auto id = only_i(i);
        const Operator dx = c.w({G::d(i), G::x(i)});
        const Operator xd = c.w({G::x(i), G::d(i)});
        const Operator s = c.w({G::sigma(i, 1)});
        const Operator s_inv = c.w({G::sigma(i, -1)});
        c.equal("dx_plus" + id, dx - q * xd, s_inv);
        c.equal("dx_minus" + id, dx - q_inv * xd, s);
        c.equal("dx_closed" + id, dx, OperatorQuotient{q * s - q_inv * s_inv, q_minus_q_inv()});
        c.equal("xd_closed" + id, xd, OperatorQuotient{s - s_inv, q_minus_q_inv()});
    }

    c.rule_instances(rules);
    return report;
}

} // namespace qweyl
