#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qweyl {

using BigInt = boost::multiprecision::cpp_int;

/// An element of Z[q, q^-1].
///
/// Terms are kept sorted by exponent with every stored coefficient nonzero,
/// so the representation is canonical and operator== is ring equality.
class LaurentPoly {
public:
    using Term = std::pair<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(int c); // NOLINT(google-explicit-constructor)
    LaurentPoly(const BigInt& c); // NOLINT(google-explicit-constructor)

    /// c * q^exponent
    static LaurentPoly monomial(int exponent, const BigInt& c = 1);
    static LaurentPoly q() { return monomial(1); }

    /// Builds from arbitrary (exponent, coefficient) pairs, collecting like terms.
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    BigInt coeff(int exponent) const;
    /// Lowest / highest exponent; undefined for zero.
    int min_exponent() const { return terms_.front().first; }
    int max_exponent() const { return terms_.back().first; }

    /// Multiplication by q^k.
    LaurentPoly shifted(int k) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(LaurentPoly a);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    // Total order used only for container keys.
    friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

private:
    std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient c with c * den == num. Throws NotDivisible if none exists in
/// Z[q, q^-1], InvalidArgs if den is zero.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// q^(m-1) + q^(m-3) + ... + q^(1-m); q_int(-m) = -q_int(m).
LaurentPoly q_int(int m);
/// [m]! = [m][m-1]...[1]
LaurentPoly q_fact(int m);
/// Gaussian binomial [a over b], 0 <= b <= a, via the Pascal recurrence.
LaurentPoly q_binom(int a, int b);

/// q - q^-1
LaurentPoly q_minus_q_inv();

/// Specialization q = 1.
BigInt eval_at_one(const LaurentPoly& p);

/// q -> q^-1
LaurentPoly bar(const LaurentPoly& p);

/// Descending exponents, e.g. "q^2+2+q^-2", "-q+q^-1", "0".
std::string to_string(const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

} // namespace qweyl
