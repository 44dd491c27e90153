#include "qweyl/multi_index.hpp"

#include "qweyl/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qweyl {

int MultiIndex::degree() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool MultiIndex::is_nonnegative() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v >= 0; });
}

bool MultiIndex::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& rhs) {
    check_rank(*this, rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += rhs.entries_[k];
    }
    return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& rhs) {
    check_rank(*this, rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= rhs.entries_[k];
    }
    return *this;
}

MultiIndex operator*(int k, MultiIndex a) {
    for (auto& v : a.entries_) {
        v *= k;
    }
    return a;
}

MultiIndex epsilon(std::size_t n, int i) {
    if (i < 1 || static_cast<std::size_t>(i) > n) {
        throw InvalidIndex("epsilon: index " + std::to_string(i) + " outside 1.." +
                           std::to_string(n));
    }
    MultiIndex e(n);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return e;
}

void check_rank(const MultiIndex& a, const MultiIndex& b) {
    if (a.rank() != b.rank()) {
        throw RankMismatch(a.rank(), b.rank());
    }
}

int star(const MultiIndex& alpha, const MultiIndex& beta) {
    check_rank(alpha, beta);
    // sum_i alpha_i * (beta_1 + ... + beta_{i-1})
    int prefix = 0;
    int total = 0;
    for (std::size_t i = 0; i < alpha.rank(); ++i) {
        total += alpha[i] * prefix;
        prefix += beta[i];
    }
    return total;
}

int theta_exponent(const MultiIndex& alpha, const MultiIndex& beta) {
    return star(alpha, beta) - star(beta, alpha);
}

LaurentPoly theta(const MultiIndex& alpha, const MultiIndex& beta) {
    return LaurentPoly::monomial(theta_exponent(alpha, beta));
}

std::string to_string(const MultiIndex& m) {
    std::string s = "(";
    for (std::size_t k = 0; k < m.rank(); ++k) {
        if (k) {
            s += ',';
        }
        s += std::to_string(m[k]);
    }
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& m) { return os << to_string(m); }

} // namespace qweyl
