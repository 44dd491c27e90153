#include "qweyl/realization.hpp"

#include "qweyl/errors.hpp"

#include <cstdlib>
#include <map>
#include <utility>
#include <variant>

namespace qweyl {

std::string to_string(Chevalley g) {
    switch (g) {
    case Chevalley::E:
        return "e";
    case Chevalley::F:
        return "f";
    case Chevalley::K:
        return "K";
    case Chevalley::KInv:
        return "K^-1";
    }
    return {};
}

int CartanMatrix::operator()(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) {
        throw InvalidIndex("Cartan matrix index out of range");
    }
    if (i == j) {
        return 2;
    }
    return std::abs(i - j) == 1 ? -1 : 0;
}

const Operator& Realization::generator(Chevalley g, int i) const {
    if (i < 1 || i > n) {
        throw InvalidIndex("generator index " + std::to_string(i) + " outside 1.." +
                           std::to_string(n));
    }
    const auto k = static_cast<std::size_t>(i - 1);
    switch (g) {
    case Chevalley::E:
        return e[k];
    case Chevalley::F:
        return f[k];
    case Chevalley::K:
        return K[k];
    case Chevalley::KInv:
        return K_inv[k];
    }
    throw InvalidArgs("unknown generator");
}

Realization build_realization(int n) {
    if (n < 1) {
        throw InvalidArgs("n must be >= 1");
    }
    using G = GenSymbol;
    const auto rank = static_cast<std::size_t>(n);
    Realization r;
    r.n = n;
    for (int i = 1; i < n; ++i) {
        r.e.push_back(Operator::word(rank, {G::x(i), G::d(i + 1), G::sigma(i, 1)}));
        r.f.push_back(Operator::word(rank, {G::sigma(i, -1), G::x(i + 1), G::d(i)}));
        r.K.push_back(Operator::word(rank, {G::sigma(i, 1), G::sigma(i + 1, -1)}));
        r.K_inv.push_back(Operator::word(rank, {G::sigma(i, -1), G::sigma(i + 1, 1)}));
    }

    Word lower_prefix; // prod_{i<n} sigma_i^-1
    Word raise_suffix; // prod_{i<n} sigma_i
    for (int i = 1; i < n; ++i) {
        lower_prefix.push_back(G::sigma(i, -1));
        raise_suffix.push_back(G::sigma(i, 1));
    }

    Operator e_n(rank);
    for (int i = 1; i <= n; ++i) {
        Word w = lower_prefix;
        w.insert(w.end(), {G::x(n), G::x(i), G::d(i), G::theta(epsilon(rank, i))});
        e_n.add_term(std::move(w), 1);
    }
    r.e.push_back(std::move(e_n));

    Word fw{G::d(n)};
    fw.insert(fw.end(), raise_suffix.begin(), raise_suffix.end());
    r.f.push_back(Operator::word(rank, std::move(fw), -1));

    Word kw{G::sigma(n, 1)};
    Word kw_inv{G::sigma(n, -1)};
    for (int i = 1; i <= n; ++i) {
        kw.push_back(G::sigma(i, 1));
        kw_inv.push_back(G::sigma(i, -1));
    }
    r.K.push_back(Operator::word(rank, std::move(kw)));
    r.K_inv.push_back(Operator::word(rank, std::move(kw_inv)));
    return r;
}

LaurentPoly weight_sum(const MultiIndex& beta) {
    LaurentPoly s;
    for (int k = 1; k <= static_cast<int>(beta.rank()); ++k) {
        const int b = beta[static_cast<std::size_t>(k - 1)];
        if (b != 0) {
            s += q_int(b).shifted(theta_exponent(epsilon(beta.rank(), k), beta));
        }
    }
    return s;
}

namespace {

// c * x^(target) when target is in Z_+^n, zero otherwise.
Element monomial_or_zero(const MultiIndex& target, const LaurentPoly& c) {
    Element out(target.rank());
    if (target.is_nonnegative()) {
        out.add_term(target, c);
    }
    return out;
}

} // namespace

Element closed_form_action(Chevalley g, int i, const MultiIndex& beta) {
    const auto rank = beta.rank();
    const int n = static_cast<int>(rank);
    if (i < 1 || i > n) {
        throw InvalidIndex("generator index " + std::to_string(i) + " outside 1.." +
                           std::to_string(n));
    }
    if (!beta.is_nonnegative()) {
        throw InvalidArgs("closed_form_action: beta must be nonnegative");
    }
    auto b = [&](int k) { return beta[static_cast<std::size_t>(k - 1)]; };
    auto eps = [&](int k) { return epsilon(rank, k); };

    if (i < n) {
        switch (g) {
        case Chevalley::E:
            return monomial_or_zero(beta + eps(i) - eps(i + 1), q_int(b(i) + 1));
        case Chevalley::F:
            return monomial_or_zero(beta - eps(i) + eps(i + 1), q_int(b(i + 1) + 1));
        case Chevalley::K:
            return Element::monomial(beta, LaurentPoly::monomial(b(i) - b(i + 1)));
        case Chevalley::KInv:
            return Element::monomial(beta, LaurentPoly::monomial(b(i + 1) - b(i)));
        }
    }
    switch (g) {
    case Chevalley::E:
        return monomial_or_zero(beta + eps(n), q_int(b(n) + 1) * weight_sum(beta));
    case Chevalley::F:
        return monomial_or_zero(beta - eps(n), LaurentPoly(-1));
    case Chevalley::K:
        return Element::monomial(beta, LaurentPoly::monomial(beta.degree() + b(n)));
    case Chevalley::KInv:
        return Element::monomial(beta, LaurentPoly::monomial(-beta.degree() - b(n)));
    }
    throw InvalidArgs("unknown generator");
}

namespace {

constexpr Chevalley all_generators[] = {Chevalley::E, Chevalley::F, Chevalley::K,
                                        Chevalley::KInv};

std::string gen_id(Chevalley g, int i) {
    return g == Chevalley::KInv ? "K" + std::to_string(i) + "^-1"
                                : to_string(g) + std::to_string(i);
}

std::string rel(int k, int i, int j) {
    return "R" + std::to_string(k) + ":i=" + std::to_string(i) + ",j=" + std::to_string(j);
}

// Runs several (lhs, rhs) operator identities under one relation id; the
// first failing part is reported.
class RelationChecker {
public:
    RelationChecker(std::size_t n, int degree, VerificationReport& report)
        : n_(n), report_(report), monomials_(monomials_up_to(n, degree)) {}

    struct Part {
        Operator lhs;
        std::variant<Operator, OperatorQuotient> rhs;
        std::string label;
    };

    void check(std::string id, const std::vector<Part>& parts) {
        for (const auto& p : parts) {
            auto lhs = [&](const MultiIndex& b) { return apply(p.lhs, b); };
            auto rhs = [&](const MultiIndex& b) {
                return std::visit([&](const auto& r) { return apply(r, b); }, p.rhs);
            };
            if (auto ce = sweep_equal(monomials_, lhs, rhs)) {
                report_.add(std::move(id), std::move(ce), p.label);
                return;
            }
        }
        report_.add(std::move(id), std::nullopt);
    }

    Operator zero() const { return Operator(n_); }
    Operator one() const { return Operator::identity(n_); }

private:
    std::size_t n_;
    VerificationReport& report_;
    std::vector<MultiIndex> monomials_;
};

// (R3)-(R7) among generators 1..m of r.
void commutation_and_serre(RelationChecker& c, const Realization& r, int m) {
    const LaurentPoly q2 = q_int(2);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            const Operator& ei = r.generator(Chevalley::E, i);
            const Operator& fj = r.generator(Chevalley::F, j);
            const Operator bracket = ei * fj - fj * ei;
            if (i == j) {
                c.check(rel(3, i, j), {{bracket,
                                        OperatorQuotient{r.generator(Chevalley::K, i) -
                                                             r.generator(Chevalley::KInv, i),
                                                         q_minus_q_inv()},
                                        "[e_i,f_i] = (K_i - K_i^-1)/(q - q^-1)"}});
            } else {
                c.check(rel(3, i, j), {{bracket, c.zero(), "[e_i,f_j] = 0"}});
            }
        }
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (std::abs(i - j) != 1) {
                continue;
            }
            const Operator& ei = r.generator(Chevalley::E, i);
            const Operator& ej = r.generator(Chevalley::E, j);
            c.check(rel(4, i, j),
                    {{ei * ei * ej - q2 * (ei * ej * ei) + ej * ei * ei, c.zero(), "e Serre"}});
        }
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 2; j <= m; ++j) {
            const Operator& ei = r.generator(Chevalley::E, i);
            const Operator& ej = r.generator(Chevalley::E, j);
            c.check(rel(5, i, j), {{ei * ej, ej * ei, "e_i e_j = e_j e_i"}});
        }
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (std::abs(i - j) != 1) {
                continue;
            }
            const Operator& fi = r.generator(Chevalley::F, i);
            const Operator& fj = r.generator(Chevalley::F, j);
            c.check(rel(6, i, j),
                    {{fi * fi * fj - q2 * (fi * fj * fi) + fj * fi * fi, c.zero(), "f Serre"}});
        }
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 2; j <= m; ++j) {
            const Operator& fi = r.generator(Chevalley::F, i);
            const Operator& fj = r.generator(Chevalley::F, j);
            c.check(rel(7, i, j), {{fi * fj, fj * fi, "f_i f_j = f_j f_i"}});
        }
    }
}

} // namespace

VerificationReport oracle_check(int n, int degree) {
    const Realization r = build_realization(n);
    VerificationReport report;
    report.check = "oracle";
    report.n = n;
    report.rank_sl = n + 1;
    report.degree = degree;
    const auto monomials = monomials_up_to(static_cast<std::size_t>(n), degree);
    for (int i = 1; i <= n; ++i) {
        for (Chevalley g : all_generators) {
            const Operator& op = r.generator(g, i);
            report.add("oracle:" + gen_id(g, i),
                       sweep_equal(
                           monomials, [&](const MultiIndex& b) { return apply(op, b); },
                           [&](const MultiIndex& b) { return closed_form_action(g, i, b); }));
        }
    }
    return report;
}

VerificationReport verify_serre(int n, int degree) {
    return verify_serre(build_realization(n), degree);
}

VerificationReport verify_serre(const Realization& r, int degree) {
    const int n = r.n;
    VerificationReport report;
    report.check = "serre";
    report.n = n;
    report.rank_sl = n + 1;
    report.degree = degree;

    RelationChecker c(static_cast<std::size_t>(n), degree, report);
    const CartanMatrix a(n);

    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const Operator& ki = r.generator(Chevalley::K, i);
            const Operator& kj = r.generator(Chevalley::K, j);
            if (i == j) {
                c.check(rel(1, i, j),
                        {{ki * r.generator(Chevalley::KInv, i), c.one(), "K_i K_i^-1 = 1"},
                         {r.generator(Chevalley::KInv, i) * ki, c.one(), "K_i^-1 K_i = 1"}});
            } else {
                c.check(rel(1, i, j), {{ki * kj, kj * ki, "K_i K_j = K_j K_i"}});
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const Operator& ki = r.generator(Chevalley::K, i);
            const Operator& ki_inv = r.generator(Chevalley::KInv, i);
            const Operator& ej = r.generator(Chevalley::E, j);
            const Operator& fj = r.generator(Chevalley::F, j);
            c.check(rel(2, i, j),
                    {{ki * ej * ki_inv, LaurentPoly::monomial(a(i, j)) * ej,
                      "K_i e_j K_i^-1 = q^a_ij e_j"},
                     {ki * fj * ki_inv, LaurentPoly::monomial(-a(i, j)) * fj,
                      "K_i f_j K_i^-1 = q^-a_ij f_j"}});
        }
    }
    commutation_and_serre(c, r, n);
    return report;
}

VerificationReport verify_gl(int n, int degree) {
    if (n < 2) {
        throw InvalidArgs("verify_gl needs n >= 2");
    }
    const Realization r = build_realization(n);
    const auto rank = static_cast<std::size_t>(n);
    VerificationReport report;
    report.check = "gl";
    report.n = n;
    report.rank_sl = n;
    report.degree = degree;
    RelationChecker c(rank, degree, report);

    auto k = [&](int i) { return Operator::generator(rank, GenSymbol::sigma(i, 1)); };
    auto k_inv = [&](int i) { return Operator::generator(rank, GenSymbol::sigma(i, -1)); };
    // <eps_i, alpha_j> with alpha_j = eps_j - eps_{j+1}
    auto pairing = [](int i, int j) { return (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0); };

    for (int i = 1; i <= n; ++i) {
        c.check("GL1:i=" + std::to_string(i),
                {{k(i) * k_inv(i), c.one(), "k_i k_i^-1 = 1"},
                 {k_inv(i) * k(i), c.one(), "k_i^-1 k_i = 1"}});
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            c.check("GL2:i=" + std::to_string(i) + ",j=" + std::to_string(j),
                    {{k(i) * k(j), k(j) * k(i), "k_i k_j = k_j k_i"}});
        }
    }
    for (int i = 1; i < n; ++i) {
        c.check("GL3:i=" + std::to_string(i),
                {{r.generator(Chevalley::K, i), k(i) * k_inv(i + 1), "K_i = k_i k_{i+1}^-1"}});
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j < n; ++j) {
            const Operator& ej = r.generator(Chevalley::E, j);
            const Operator& fj = r.generator(Chevalley::F, j);
            c.check("GL4:i=" + std::to_string(i) + ",j=" + std::to_string(j),
                    {{k(i) * ej * k_inv(i), LaurentPoly::monomial(pairing(i, j)) * ej,
                      "k_i e_j k_i^-1 = q^<eps_i,alpha_j> e_j"},
                     {k(i) * fj * k_inv(i), LaurentPoly::monomial(-pairing(i, j)) * fj,
                      "k_i f_j k_i^-1 = q^-<eps_i,alpha_j> f_j"}});
        }
    }
    commutation_and_serre(c, r, n - 1);
    return report;
}

VerificationReport lemma21_check(int n, int degree, int max_shift) {
    if (n < 1) {
        throw InvalidArgs("n must be >= 1");
    }
    const auto rank = static_cast<std::size_t>(n);
    VerificationReport report;
    report.check = "lemma21";
    report.n = n;
    report.rank_sl = n + 1;
    report.degree = degree;
    const auto monomials = monomials_up_to(rank, degree);
    for (int i = 1; i < n; ++i) {
        const MultiIndex step = epsilon(rank, i) - epsilon(rank, i + 1);
        for (int m = -max_shift; m <= max_shift; ++m) {
            const MultiIndex shift = m * step;
            auto side = [&](bool shifted) {
                return [&, shifted](const MultiIndex& beta) {
                    const MultiIndex moved = beta + shift;
                    if (!moved.is_nonnegative()) {
                        return Element(rank);
                    }
                    return Element::monomial(beta, weight_sum(shifted ? moved : beta));
                };
            };
            report.add("L21:i=" + std::to_string(i) + ",m=" + std::to_string(m),
                       sweep_equal(monomials, side(false), side(true)));
        }
    }
    return report;
}

namespace {

// Integer-coefficient divided power algebra A(n) at q = 1.
using Classical = std::map<MultiIndex, BigInt>;

Classical cl_x(int i, const Classical& v) {
    Classical out;
    for (const auto& [beta, c] : v) {
        MultiIndex b = beta;
        auto& bi = b[static_cast<std::size_t>(i - 1)];
        const int mult = bi + 1; // x_i x^(b) = (b_i + 1) x^(b + eps_i)
        bi += 1;
        out[b] += c * mult;
    }
    return out;
}

Classical cl_d(int i, const Classical& v) {
    Classical out;
    for (const auto& [beta, c] : v) {
        MultiIndex b = beta;
        auto& bi = b[static_cast<std::size_t>(i - 1)];
        if (bi == 0) {
            continue;
        }
        bi -= 1;
        out[b] += c;
    }
    return out;
}

Element to_element(std::size_t rank, const Classical& v, const BigInt& sign = 1) {
    Element out(rank);
    for (const auto& [beta, c] : v) {
        out.add_term(beta, LaurentPoly(BigInt(c * sign)));
    }
    return out;
}

Element classical_action(Chevalley g, int i, const MultiIndex& beta) {
    const auto rank = beta.rank();
    const int n = static_cast<int>(rank);
    const Classical v{{beta, 1}};
    switch (g) {
    case Chevalley::K:
    case Chevalley::KInv:
        return Element::monomial(beta);
    case Chevalley::E:
        if (i < n) {
            return to_element(rank, cl_x(i, cl_d(i + 1, v)));
        } else {
            Classical euler;
            for (int k = 1; k <= n; ++k) {
                for (const auto& [b, c] : cl_x(k, cl_d(k, v))) {
                    euler[b] += c;
                }
            }
            return to_element(rank, cl_x(n, euler));
        }
    case Chevalley::F:
        if (i < n) {
            return to_element(rank, cl_x(i + 1, cl_d(i, v)));
        }
        return to_element(rank, cl_d(n, v), -1);
    }
    throw InvalidArgs("unknown generator");
}

Element at_one(const Element& e) {
    Element out(e.rank());
    for (const auto& [beta, c] : e.terms()) {
        out.add_term(beta, LaurentPoly(eval_at_one(c)));
    }
    return out;
}

} // namespace

VerificationReport classical_degeneration_check(int n, int degree) {
    return classical_degeneration_check(build_realization(n), degree);
}

VerificationReport classical_degeneration_check(const Realization& r, int degree) {
    VerificationReport report;
    report.check = "classical";
    report.n = r.n;
    report.rank_sl = r.n + 1;
    report.degree = degree;
    const auto monomials = monomials_up_to(static_cast<std::size_t>(r.n), degree);
    for (int i = 1; i <= r.n; ++i) {
        for (Chevalley g : all_generators) {
            const Operator& op = r.generator(g, i);
            report.add("C:" + gen_id(g, i),
                       sweep_equal(
                           monomials, [&](const MultiIndex& b) { return at_one(apply(op, b)); },
                           [&](const MultiIndex& b) { return classical_action(g, i, b); }));
        }
    }
    return report;
}

} // namespace qweyl
