#include "qweyl/divided_power.hpp"

#include "qweyl/errors.hpp"

#include <functional>
#include <sstream>

namespace qweyl {

Element Element::monomial(const MultiIndex& beta, const LaurentPoly& c) {
    Element e(beta.rank());
    e.add_term(beta, c);
    return e;
}

Element Element::scalar(std::size_t rank, const LaurentPoly& c) {
    return monomial(MultiIndex(rank), c);
}

LaurentPoly Element::coeff(const MultiIndex& beta) const {
    auto it = terms_.find(beta);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

void Element::add_term(const MultiIndex& beta, const LaurentPoly& c) {
    if (beta.rank() != rank_) {
        throw RankMismatch(rank_, beta.rank());
    }
    if (!beta.is_nonnegative()) {
        throw InvalidArgs("Element: negative exponent " + to_string(beta));
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(beta, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Element& Element::operator+=(const Element& rhs) {
    if (rhs.rank_ != rank_) {
        throw RankMismatch(rank_, rhs.rank_);
    }
    for (const auto& [beta, c] : rhs.terms_) {
        add_term(beta, c);
    }
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    if (rhs.rank_ != rank_) {
        throw RankMismatch(rank_, rhs.rank_);
    }
    for (const auto& [beta, c] : rhs.terms_) {
        add_term(beta, -c);
    }
    return *this;
}

Element& Element::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [beta, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

LaurentPoly structure_constant(const MultiIndex& alpha, const MultiIndex& beta) {
    check_rank(alpha, beta);
    LaurentPoly c = LaurentPoly::monomial(star(alpha, beta));
    for (std::size_t i = 0; i < alpha.rank(); ++i) {
        if (alpha[i] != 0 && beta[i] != 0) {
            c *= q_binom(alpha[i] + beta[i], alpha[i]);
        }
    }
    return c;
}

Element mul_monomial(const MultiIndex& alpha, const MultiIndex& beta) {
    check_rank(alpha, beta);
    if (!alpha.is_nonnegative() || !beta.is_nonnegative()) {
        throw InvalidArgs("mul_monomial: exponents must be nonnegative");
    }
    return Element::monomial(alpha + beta, structure_constant(alpha, beta));
}

Element mul(const Element& a, const Element& b) {
    if (a.rank() != b.rank()) {
        throw RankMismatch(a.rank(), b.rank());
    }
    Element out(a.rank());
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            out.add_term(alpha + beta, ca * cb * structure_constant(alpha, beta));
        }
    }
    return out;
}

std::vector<MultiIndex> monomials_up_to(std::size_t n, int max_degree) {
    std::vector<MultiIndex> out;
    if (max_degree < 0) {
        return out;
    }
    MultiIndex current(n);
    std::function<void(std::size_t, int)> fill = [&](std::size_t pos, int budget) {
        if (pos == n) {
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            current[pos] = v;
            fill(pos + 1, budget - v);
        }
        current[pos] = 0;
    };
    fill(0, max_degree);
    return out;
}

std::string coefficient_prefix(const LaurentPoly& c) {
    if (c == LaurentPoly(1)) {
        return "";
    }
    if (c == LaurentPoly(-1)) {
        return "-";
    }
    if (c.is_monomial()) {
        return to_string(c) + " ";
    }
    return "(" + to_string(c) + ") ";
}

std::string to_expression(const Element& e) {
    if (e.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [beta, c] : e.terms()) {
        std::string term = coefficient_prefix(c) + "x^" + to_string(beta);
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

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << to_expression(e); }

} // namespace qweyl
