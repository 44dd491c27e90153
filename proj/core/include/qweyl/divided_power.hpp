#pragma once

#include "qweyl/laurent.hpp"
#include "qweyl/multi_index.hpp"

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace qweyl {

/// A finite Z[q, q^-1]-combination of divided-power monomials x^(beta) in
/// A_q(n). Terms are ordered lexicographically by beta and never zero.
class Element {
public:
    using Terms = std::map<MultiIndex, LaurentPoly>;

    explicit Element(std::size_t rank) : rank_(rank) {}

    /// c * x^(beta)
    static Element monomial(const MultiIndex& beta, const LaurentPoly& c = 1);
    /// c * x^(0)
    static Element scalar(std::size_t rank, const LaurentPoly& c);

    std::size_t rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    LaurentPoly coeff(const MultiIndex& beta) const;

    /// Adds c * x^(beta); beta must be nonnegative and of matching rank.
    void add_term(const MultiIndex& beta, const LaurentPoly& c);

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const LaurentPoly& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const LaurentPoly& c, Element a) { return a *= c; }
    friend Element operator-(Element a) { return a *= LaurentPoly(-1); }

    friend bool operator==(const Element&, const Element&) = default;

private:
    std::size_t rank_;
    Terms terms_;
};

/// x^(alpha) x^(beta) = q^(alpha*beta) [alpha+beta over alpha] x^(alpha+beta)
Element mul_monomial(const MultiIndex& alpha, const MultiIndex& beta);

/// Coefficient part of mul_monomial.
LaurentPoly structure_constant(const MultiIndex& alpha, const MultiIndex& beta);

/// Bilinear extension of mul_monomial.
Element mul(const Element& a, const Element& b);

/// All beta in Z_+^n with |beta| <= max_degree, lexicographically ascending.
std::vector<MultiIndex> monomials_up_to(std::size_t n, int max_degree);

/// Parseable text, e.g. "(q+q^-1) x^(1,0) - x^(0,2)"; "0" for zero.
std::string to_expression(const Element& e);
std::ostream& operator<<(std::ostream& os, const Element& e);

/// Coefficient prefix used when printing "coeff * thing": "" for 1, "-" for
/// -1, "q^3 " for monomials, "(q+q^-1) " otherwise.
std::string coefficient_prefix(const LaurentPoly& c);

} // namespace qweyl
