#include "qweyl/laurent.hpp"

#include "qweyl/errors.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace qweyl {

LaurentPoly::LaurentPoly(int c) {
    if (c != 0) {
        terms_.emplace_back(0, BigInt(c));
    }
}

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (c != 0) {
        terms_.emplace_back(0, c);
    }
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& c) {
    LaurentPoly p;
    if (c != 0) {
        p.terms_.emplace_back(exponent, c);
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second == 0) {
                p.terms_.pop_back();
            }
        } else if (t.second != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) {
        return it->second;
    }
    return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) {
        t.first += k;
    }
    return p;
}

namespace {

// Merge of two sorted term lists with sign applied to the right operand.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b,
                                           bool negate_b) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, negate_b ? BigInt(-b[j].second) : b[j].second);
            ++j;
        } else {
            BigInt c = negate_b ? BigInt(a[i].second - b[j].second)
                                : BigInt(a[i].second + b[j].second);
            if (c != 0) {
                out.emplace_back(a[i].first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.terms_.empty()) {
        return *this;
    }
    terms_ = merge_terms(terms_, rhs.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    if (rhs.terms_.empty()) {
        return *this;
    }
    terms_ = merge_terms(terms_, rhs.terms_, true);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    if (a.is_monomial() && b.is_monomial()) {
        return LaurentPoly::monomial(a.terms_[0].first + b.terms_[0].first,
                                     a.terms_[0].second * b.terms_[0].second);
    }
    const long lo = static_cast<long>(a.min_exponent()) + b.min_exponent();
    const long span = static_cast<long>(a.max_exponent()) - a.min_exponent() +
                      b.max_exponent() - b.min_exponent() + 1;
    LaurentPoly out;
    if (span <= 4 * static_cast<long>(a.size() * b.size()) + 64) {
        std::vector<BigInt> dense(static_cast<std::size_t>(span));
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
            }
        }
        for (std::size_t k = 0; k < dense.size(); ++k) {
            if (dense[k] != 0) {
                out.terms_.emplace_back(static_cast<int>(lo + static_cast<long>(k)),
                                        std::move(dense[k]));
            }
        }
        return out;
    }
    std::vector<LaurentPoly::Term> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            prods.emplace_back(ea + eb, ca * cb);
        }
    }
    return LaurentPoly::from_terms(std::move(prods));
}

LaurentPoly operator-(LaurentPoly a) {
    for (auto& t : a.terms_) {
        t.second = -t.second;
    }
    return a;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (auto c = a.terms_[k].first <=> b.terms_[k].first; c != 0) {
            return c;
        }
        if (a.terms_[k].second != b.terms_[k].second) {
            return a.terms_[k].second < b.terms_[k].second ? std::strong_ordering::less
                                                           : std::strong_ordering::greater;
        }
    }
    return a.terms_.size() <=> b.terms_.size();
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) {
        throw InvalidArgs("exact_div: division by zero");
    }
    if (num.is_zero()) {
        return {};
    }
    // Shift both to ordinary polynomials with nonzero constant term, then do
    // long division over Z from the top degree down.
    const int num_lo = num.min_exponent();
    const int den_lo = den.min_exponent();
    const int den_deg = den.max_exponent() - den_lo;
    const BigInt& lead = den.terms().back().second;

    std::vector<BigInt> rem(static_cast<std::size_t>(num.max_exponent() - num_lo + 1));
    for (const auto& [e, c] : num.terms()) {
        rem[static_cast<std::size_t>(e - num_lo)] = c;
    }
    std::vector<BigInt> den_dense(static_cast<std::size_t>(den_deg + 1));
    for (const auto& [e, c] : den.terms()) {
        den_dense[static_cast<std::size_t>(e - den_lo)] = c;
    }

    const int num_deg = static_cast<int>(rem.size()) - 1;
    if (num_deg < den_deg) {
        throw NotDivisible("exact_div: " + to_string(num) + " is not divisible by " +
                           to_string(den));
    }
    std::vector<LaurentPoly::Term> quotient;
    for (int d = num_deg; d >= den_deg; --d) {
        BigInt& top = rem[static_cast<std::size_t>(d)];
        if (top == 0) {
            continue;
        }
        if (top % lead != 0) {
            throw NotDivisible("exact_div: " + to_string(num) + " is not divisible by " +
                               to_string(den));
        }
        BigInt factor = top / lead;
        const int shift = d - den_deg;
        for (int k = 0; k <= den_deg; ++k) {
            rem[static_cast<std::size_t>(shift + k)] -= factor * den_dense[static_cast<std::size_t>(k)];
        }
        quotient.emplace_back(shift + num_lo - den_lo, std::move(factor));
    }
    for (const auto& r : rem) {
        if (r != 0) {
            throw NotDivisible("exact_div: " + to_string(num) + " is not divisible by " +
                               to_string(den));
        }
    }
    return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly q_int(int m) {
    if (m < 0) {
        return -q_int(-m);
    }
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(static_cast<std::size_t>(m));
    for (int e = 1 - m; e <= m - 1; e += 2) {
        terms.emplace_back(e, BigInt(1));
    }
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly q_fact(int m) {
    if (m < 0) {
        throw InvalidArgs("q_fact: negative argument " + std::to_string(m));
    }
    LaurentPoly out(1);
    for (int k = 2; k <= m; ++k) {
        out *= q_int(k);
    }
    return out;
}

LaurentPoly q_binom(int a, int b) {
    if (a < 0 || b < 0 || b > a) {
        throw InvalidArgs("q_binom: need 0 <= b <= a, got a=" + std::to_string(a) +
                          ", b=" + std::to_string(b));
    }
    // Pascal rows are cached; q_binom sits on the A_q(n) multiplication path.
    static std::mutex mutex;
    static std::vector<std::vector<LaurentPoly>> rows{{LaurentPoly(1)}};
    std::lock_guard lock(mutex);
    while (static_cast<int>(rows.size()) <= a) {
        const auto& prev = rows.back();
        const int r = static_cast<int>(rows.size());
        std::vector<LaurentPoly> row(static_cast<std::size_t>(r + 1));
        row[0] = LaurentPoly(1);
        row[static_cast<std::size_t>(r)] = LaurentPoly(1);
        // [r over k] = q^k [r-1 over k] + q^(k-r) [r-1 over k-1]
        for (int k = 1; k < r; ++k) {
            row[static_cast<std::size_t>(k)] =
                prev[static_cast<std::size_t>(k)].shifted(k) +
                prev[static_cast<std::size_t>(k - 1)].shifted(k - r);
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

LaurentPoly q_minus_q_inv() {
    return LaurentPoly::from_terms({{1, BigInt(1)}, {-1, BigInt(-1)}});
}

BigInt eval_at_one(const LaurentPoly& p) {
    BigInt s = 0;
    for (const auto& t : p.terms()) {
        s += t.second;
    }
    return s;
}

LaurentPoly bar(const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
        terms.emplace_back(-e, c);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const int e = it->first;
        BigInt c = it->second;
        if (c < 0) {
            os << '-';
            c = -c;
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c != 1) {
            os << c;
        }
        os << 'q';
        if (e != 1) {
            os << '^' << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

} // namespace qweyl
