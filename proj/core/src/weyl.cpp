#include "qweyl/weyl.hpp"

#include "qweyl/errors.hpp"

#include <algorithm>

namespace qweyl {

int degree_shift(const GenSymbol& g) {
    switch (g.kind) {
    case GenKind::X:
        return 1;
    case GenKind::D:
        return -1;
    default:
        return 0;
    }
}

int degree_shift(const Word& w) {
    int s = 0;
    for (const auto& g : w) {
        s += degree_shift(g);
    }
    return s;
}

void validate(const GenSymbol& g, std::size_t n) {
    if (g.kind == GenKind::Theta) {
        if (g.mu.rank() != n) {
            throw RankMismatch("Theta weight " + to_string(g.mu) + " in rank " +
                               std::to_string(n));
        }
        return;
    }
    if (g.index < 1 || static_cast<std::size_t>(g.index) > n) {
        throw InvalidIndex("generator " + to_expression(g) + " outside 1.." + std::to_string(n));
    }
    if (g.kind == GenKind::Sigma && g.exp != 1 && g.exp != -1) {
        throw InvalidArgs("sigma exponent must be +1 or -1");
    }
}

Operator Operator::scalar(std::size_t rank, const LaurentPoly& c) {
    Operator op(rank);
    op.add_term({}, c);
    return op;
}

Operator Operator::word(std::size_t rank, Word w, const LaurentPoly& c) {
    Operator op(rank);
    op.add_term(std::move(w), c);
    return op;
}

void Operator::add_term(Word w, const LaurentPoly& c) {
    for (const auto& g : w) {
        validate(g, rank_);
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Operator& Operator::operator+=(const Operator& rhs) {
    if (rhs.rank_ != rank_) {
        throw RankMismatch(rank_, rhs.rank_);
    }
    for (const auto& [w, c] : rhs.terms_) {
        add_term(w, c);
    }
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
    if (rhs.rank_ != rank_) {
        throw RankMismatch(rank_, rhs.rank_);
    }
    for (const auto& [w, c] : rhs.terms_) {
        add_term(w, -c);
    }
    return *this;
}

Operator& Operator::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
    if (a.rank_ != b.rank_) {
        throw RankMismatch(a.rank_, b.rank_);
    }
    Operator out(a.rank_);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            LaurentPoly c = ca * cb;
            auto [it, inserted] = out.terms_.try_emplace(std::move(w), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) {
                    out.terms_.erase(it);
                }
            }
        }
    }
    return out;
}

Operator compose(const Operator& a, const Operator& b) { return a * b; }

Operator q_bracket(const Operator& a, const Operator& b, const LaurentPoly& c) {
    return a * b - c * (b * a);
}

// ---------------------------------------------------------------------------
// Action on A_q(n)

std::optional<std::pair<MultiIndex, LaurentPoly>> apply_word(const Word& w,
                                                             const MultiIndex& beta) {
    MultiIndex b = beta;
    int shift = 0;
    LaurentPoly factor(1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const GenSymbol& g = *it;
        if (g.kind == GenKind::Theta) {
            shift += theta_exponent(g.mu, b);
            continue;
        }
        const auto k = static_cast<std::size_t>(g.index - 1);
        int below = 0; // eps_i * b = sum_{s<i} b_s
        for (std::size_t s = 0; s < k; ++s) {
            below += b[s];
        }
        switch (g.kind) {
        case GenKind::X:
            // x^(eps_i) x^(b) = q^(eps_i*b) [b_i + 1] x^(b + eps_i)
            shift += below;
            factor *= q_int(b[k] + 1);
            b[k] += 1;
            break;
        case GenKind::D:
            if (b[k] == 0) {
                return std::nullopt;
            }
            shift -= below;
            b[k] -= 1;
            break;
        case GenKind::Sigma:
            shift += g.exp * b[k];
            break;
        case GenKind::Theta:
            break;
        }
    }
    return std::make_pair(std::move(b), factor.shifted(shift));
}

Element apply_generator(const GenSymbol& g, const Element& e) {
    validate(g, e.rank());
    Element out(e.rank());
    const Word w{g};
    for (const auto& [beta, c] : e.terms()) {
        if (auto img = apply_word(w, beta)) {
            out.add_term(img->first, c * img->second);
        }
    }
    return out;
}

Element apply(const Operator& op, const Element& e) {
    if (op.rank() != e.rank()) {
        throw RankMismatch(op.rank(), e.rank());
    }
    Element out(e.rank());
    for (const auto& [w, cw] : op.terms()) {
        for (const auto& [beta, c] : e.terms()) {
            if (auto img = apply_word(w, beta)) {
                out.add_term(img->first, cw * c * img->second);
            }
        }
    }
    return out;
}

Element apply(const Operator& op, const MultiIndex& beta) {
    return apply(op, Element::monomial(beta));
}

Element apply(const OperatorQuotient& op, const MultiIndex& beta) {
    Element num = apply(op.numerator, beta);
    Element out(beta.rank());
    for (const auto& [b, c] : num.terms()) {
        out.add_term(b, exact_div(c, op.denominator));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

using Window = std::span<const GenSymbol>;
using Output = RewriteRule::Output;

bool is(const GenSymbol& g, GenKind k) { return g.kind == k; }

MultiIndex unit(const GenSymbol& g, std::size_t n) { return epsilon(n, g.index); }

RewriteRule pair_rule(std::string name, std::function<bool(const GenSymbol&, const GenSymbol&)> m,
                      std::function<Output(const GenSymbol&, const GenSymbol&)> r) {
    RewriteRule rule;
    rule.name = std::move(name);
    rule.arity = 2;
    rule.matches = [m = std::move(m)](Window w) { return m(w[0], w[1]); };
    rule.rewrite = [r = std::move(r)](Window w) { return r(w[0], w[1]); };
    return rule;
}

Output swapped(const GenSymbol& a, const GenSymbol& b, LaurentPoly c) {
    return {{std::move(c), Word{b, a}}};
}

} // namespace

RewriteSystem RewriteSystem::standard() {
    RewriteSystem sys;
    auto& r = sys.rules_;

    // d_i x_i = q x_i d_i + sigma_i^-1
    r.push_back(pair_rule(
        "dx_same",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::D) && is(b, GenKind::X) && a.index == b.index;
        },
        [](const GenSymbol& a, const GenSymbol& b) {
            return Output{{LaurentPoly::q(), Word{b, a}},
                          {LaurentPoly(1), Word{GenSymbol::sigma(a.index, -1)}}};
        }));
    // d_i x_j = theta(eps_j, eps_i) x_j d_i, i != j
    r.push_back(pair_rule(
        "dx_cross",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::D) && is(b, GenKind::X) && a.index != b.index;
        },
        [](const GenSymbol& a, const GenSymbol& b) {
            return swapped(a, b, LaurentPoly::monomial(b.index > a.index ? 1 : -1));
        }));
    // x_i x_j = theta(eps_i, eps_j) x_j x_i, i > j
    r.push_back(pair_rule(
        "xx",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::X) && is(b, GenKind::X) && a.index > b.index;
        },
        [](const GenSymbol& a, const GenSymbol& b) { return swapped(a, b, LaurentPoly::q()); }));
    // d_i d_j = theta(eps_i, eps_j) d_j d_i, i > j
    r.push_back(pair_rule(
        "dd",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::D) && is(b, GenKind::D) && a.index > b.index;
        },
        [](const GenSymbol& a, const GenSymbol& b) { return swapped(a, b, LaurentPoly::q()); }));
    // sigma_i^e x_j = q^(e delta_ij) x_j sigma_i^e
    r.push_back(pair_rule(
        "sigma_x",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::Sigma) && is(b, GenKind::X);
        },
        [](const GenSymbol& a, const GenSymbol& b) {
            return swapped(a, b, LaurentPoly::monomial(a.index == b.index ? a.exp : 0));
        }));
    // sigma_i^e d_j = q^(-e delta_ij) d_j sigma_i^e
    r.push_back(pair_rule(
        "sigma_d",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::Sigma) && is(b, GenKind::D);
        },
        [](const GenSymbol& a, const GenSymbol& b) {
            return swapped(a, b, LaurentPoly::monomial(a.index == b.index ? -a.exp : 0));
        }));
    // Theta(mu) x_j = theta(mu, eps_j) x_j Theta(mu)
    r.push_back(pair_rule(
        "theta_x",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::Theta) && is(b, GenKind::X);
        },
        [](const GenSymbol& a, const GenSymbol& b) {
            return swapped(a, b, theta(a.mu, unit(b, a.mu.rank())));
        }));
    // Theta(mu) d_j = theta(eps_j, mu) d_j Theta(mu)
    r.push_back(pair_rule(
        "theta_d",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::Theta) && is(b, GenKind::D);
        },
        [](const GenSymbol& a, const GenSymbol& b) {
            return swapped(a, b, theta(unit(b, a.mu.rank()), a.mu));
        }));
    r.push_back(pair_rule(
        "sigma_swap",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::Sigma) && is(b, GenKind::Sigma) && a.index > b.index;
        },
        [](const GenSymbol& a, const GenSymbol& b) { return swapped(a, b, 1); }));
    r.push_back(pair_rule(
        "sigma_cancel",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::Sigma) && is(b, GenKind::Sigma) && a.index == b.index &&
                   a.exp == -b.exp;
        },
        [](const GenSymbol&, const GenSymbol&) { return Output{{LaurentPoly(1), Word{}}}; }));
    r.push_back(pair_rule(
        "theta_sigma",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::Theta) && is(b, GenKind::Sigma);
        },
        [](const GenSymbol& a, const GenSymbol& b) { return swapped(a, b, 1); }));
    // Theta(mu) Theta(nu) = Theta(mu + nu)
    r.push_back(pair_rule(
        "theta_merge",
        [](const GenSymbol& a, const GenSymbol& b) {
            return is(a, GenKind::Theta) && is(b, GenKind::Theta);
        },
        [](const GenSymbol& a, const GenSymbol& b) {
            return Output{{LaurentPoly(1), Word{GenSymbol::theta(a.mu + b.mu)}}};
        }));

    RewriteRule zero;
    zero.name = "theta_zero";
    zero.arity = 1;
    zero.matches = [](Window w) { return is(w[0], GenKind::Theta) && w[0].mu.is_zero(); };
    zero.rewrite = [](Window) { return Output{{LaurentPoly(1), Word{}}}; };
    r.push_back(std::move(zero));
    return sys;
}

const RewriteRule* RewriteSystem::find(const std::string& name) const {
    auto it = std::find_if(rules_.begin(), rules_.end(),
                           [&](const RewriteRule& r) { return r.name == name; });
    return it == rules_.end() ? nullptr : &*it;
}

void RewriteSystem::replace(RewriteRule rule) {
    auto it = std::find_if(rules_.begin(), rules_.end(),
                           [&](const RewriteRule& r) { return r.name == rule.name; });
    if (it == rules_.end()) {
        throw InvalidArgs("no rewrite rule named " + rule.name);
    }
    *it = std::move(rule);
}

std::optional<std::pair<std::size_t, const RewriteRule*>>
RewriteSystem::match(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (const auto& rule : rules_) {
            if (pos + rule.arity > w.size()) {
                continue;
            }
            if (rule.matches(Window(w.data() + pos, rule.arity))) {
                return std::make_pair(pos, &rule);
            }
        }
    }
    return std::nullopt;
}

Operator normalize(const Operator& op, const RewriteSystem& rules) {
    constexpr std::size_t step_budget = 5'000'000;
    Operator::Terms pending = op.terms();
    Operator done(op.rank());
    std::size_t steps = 0;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const LaurentPoly& c = node.mapped();
        auto hit = rules.match(w);
        if (!hit) {
            done.add_term(w, c);
            continue;
        }
        if (++steps > step_budget) {
            throw Error("normalize: rewrite step budget exhausted");
        }
        const auto [pos, rule] = *hit;
        for (auto& [rc, rw] : rule->rewrite(std::span<const GenSymbol>(w.data() + pos, rule->arity))) {
            Word next;
            next.reserve(w.size() + rw.size());
            next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            next.insert(next.end(), rw.begin(), rw.end());
            next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule->arity),
                        w.end());
            LaurentPoly nc = c * rc;
            auto [it, inserted] = pending.try_emplace(std::move(next), nc);
            if (!inserted) {
                it->second += nc;
                if (it->second.is_zero()) {
                    pending.erase(it);
                }
            }
        }
    }
    return done;
}

bool is_canonical(const Word& w) {
    auto block = [](const GenSymbol& g) { return static_cast<int>(g.kind); };
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        const auto& a = w[k];
        const auto& b = w[k + 1];
        if (block(a) > block(b)) {
            return false;
        }
        if (block(a) != block(b)) {
            continue;
        }
        switch (a.kind) {
        case GenKind::X:
        case GenKind::D:
            if (a.index > b.index) {
                return false;
            }
            break;
        case GenKind::Sigma:
            if (a.index > b.index || (a.index == b.index && a.exp != b.exp)) {
                return false;
            }
            break;
        case GenKind::Theta:
            return false;
        }
    }
    return std::none_of(w.begin(), w.end(), [](const GenSymbol& g) {
        return g.kind == GenKind::Theta && g.mu.is_zero();
    });
}

// ---------------------------------------------------------------------------
// Equality up to a degree bound

EqualityResult op_eq_up_to_degree(const Operator& a, const Operator& b, int degree) {
    if (a.rank() != b.rank()) {
        throw RankMismatch(a.rank(), b.rank());
    }
    auto ce = sweep_equal(
        a.rank(), degree, [&](const MultiIndex& beta) { return apply(a, beta); },
        [&](const MultiIndex& beta) { return apply(b, beta); });
    return EqualityResult{!ce.has_value(), std::move(ce)};
}

EqualityResult op_eq_up_to_degree(const Operator& a, const OperatorQuotient& b, int degree) {
    if (a.rank() != b.numerator.rank()) {
        throw RankMismatch(a.rank(), b.numerator.rank());
    }
    auto ce = sweep_equal(
        a.rank(), degree, [&](const MultiIndex& beta) { return apply(a, beta); },
        [&](const MultiIndex& beta) { return apply(b, beta); });
    return EqualityResult{!ce.has_value(), std::move(ce)};
}

// ---------------------------------------------------------------------------
// Printing

std::string to_expression(const GenSymbol& g) {
    switch (g.kind) {
    case GenKind::X:
        return "x" + std::to_string(g.index);
    case GenKind::D:
        return "d" + std::to_string(g.index);
    case GenKind::Sigma:
        return "s" + std::to_string(g.index) + (g.exp < 0 ? "^-1" : "");
    case GenKind::Theta:
        return "t" + to_string(g.mu);
    }
    return {};
}

std::string to_expression(const Word& w) {
    std::string s;
    for (const auto& g : w) {
        if (!s.empty()) {
            s += ' ';
        }
        s += to_expression(g);
    }
    return s;
}

std::string to_expression(const Operator& op) {
    if (op.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [w, c] : op.terms()) {
        std::string term;
        if (w.empty()) {
            term = c.is_monomial() ? to_string(c) : "(" + to_string(c) + ")";
        } else {
            term = coefficient_prefix(c) + to_expression(w);
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Operator& op) { return os << to_expression(op); }

} // namespace qweyl
