#pragma once

#include "qweyl/laurent.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace qweyl {

/// An integer n-tuple: a monomial exponent of A_q(n), a Theta weight or a
/// shift vector. Component access is 0-based; epsilon() takes the 1-based
/// index used by the algebra.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t rank) : entries_(rank, 0) {}
    MultiIndex(std::initializer_list<int> entries) : entries_(entries) {}
    explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}

    std::size_t rank() const noexcept { return entries_.size(); }
    int operator[](std::size_t k) const { return entries_[k]; }
    int& operator[](std::size_t k) { return entries_[k]; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    /// |beta| = sum of entries
    int degree() const noexcept;
    bool is_nonnegative() const noexcept;
    bool is_zero() const noexcept;

    MultiIndex& operator+=(const MultiIndex& rhs);
    MultiIndex& operator-=(const MultiIndex& rhs);
    friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
    friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }
    friend MultiIndex operator*(int k, MultiIndex a);
    friend MultiIndex operator-(MultiIndex a) { return -1 * std::move(a); }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    /// Lexicographic.
    friend std::strong_ordering operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> entries_;
};

/// Unit vector eps_i of Z^n, 1 <= i <= n.
MultiIndex epsilon(std::size_t n, int i);

/// Throws RankMismatch unless a and b have equal rank.
void check_rank(const MultiIndex& a, const MultiIndex& b);

/// alpha * beta = sum over i > j of alpha_i beta_j.
int star(const MultiIndex& alpha, const MultiIndex& beta);

/// Exponent of theta(alpha, beta): star(alpha, beta) - star(beta, alpha).
int theta_exponent(const MultiIndex& alpha, const MultiIndex& beta);

/// theta(alpha, beta) = q^(alpha*beta - beta*alpha)
LaurentPoly theta(const MultiIndex& alpha, const MultiIndex& beta);

/// "(1,0,2)"
std::string to_string(const MultiIndex& m);
std::ostream& operator<<(std::ostream& os, const MultiIndex& m);

} // namespace qweyl
