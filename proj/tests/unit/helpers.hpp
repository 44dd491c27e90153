#pragma once

#include "qweyl/divided_power.hpp"
#include "qweyl/laurent.hpp"
#include "qweyl/multi_index.hpp"

#include <doctest.h>

#include <initializer_list>
#include <sstream>
#include <utility>

namespace qweyl::test {

// L({{2, 1}, {0, 2}, {-2, 1}}) = q^2 + 2 + q^-2
inline LaurentPoly L(std::initializer_list<std::pair<int, int>> terms) {
    std::vector<LaurentPoly::Term> t;
    for (auto [e, c] : terms) {
        t.emplace_back(e, BigInt(c));
    }
    return LaurentPoly::from_terms(std::move(t));
}

inline LaurentPoly qpow(int k) { return LaurentPoly::monomial(k); }

// Small deterministic generator (splitmix64), so failures reproduce exactly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t s_;
};

inline LaurentPoly random_poly(Rng& rng, int max_degree, int max_coeff = 5) {
    std::vector<LaurentPoly::Term> t;
    const int count = rng.uniform(1, 4);
    for (int k = 0; k < count; ++k) {
        t.emplace_back(rng.uniform(-max_degree, max_degree),
                       BigInt(rng.uniform(-max_coeff, max_coeff)));
    }
    return LaurentPoly::from_terms(std::move(t));
}

inline MultiIndex random_index(Rng& rng, std::size_t n, int lo, int hi) {
    MultiIndex m(n);
    for (std::size_t k = 0; k < n; ++k) {
        m[k] = rng.uniform(lo, hi);
    }
    return m;
}

} // namespace qweyl::test

namespace doctest {
template <> struct StringMaker<qweyl::LaurentPoly> {
    static String convert(const qweyl::LaurentPoly& p) { return qweyl::to_string(p).c_str(); }
};
template <> struct StringMaker<qweyl::MultiIndex> {
    static String convert(const qweyl::MultiIndex& m) { return qweyl::to_string(m).c_str(); }
};
template <> struct StringMaker<qweyl::Element> {
    static String convert(const qweyl::Element& e) { return qweyl::to_expression(e).c_str(); }
};
} // namespace doctest
