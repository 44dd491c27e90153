#pragma once

#include "qweyl/laurent.hpp"
#include "qweyl/multi_index.hpp"
#include "qweyl/realization.hpp"
#include "qweyl/report.hpp"
#include "qweyl/weyl.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qweyl {

enum class UqKind { E, F, K };

/// E(i), F(i) or K_v = prod_i K_i^{v_i} with v in simple-root coordinates.
struct UqSymbol {
    UqKind kind = UqKind::E;
    int index = 0;
    MultiIndex v;

    static UqSymbol e(int i) { return {UqKind::E, i, {}}; }
    static UqSymbol f(int i) { return {UqKind::F, i, {}}; }
    static UqSymbol k(MultiIndex v) { return {UqKind::K, 0, std::move(v)}; }

    friend bool operator==(const UqSymbol&, const UqSymbol&) = default;
    friend std::strong_ordering operator<=>(const UqSymbol&, const UqSymbol&) = default;
};

using UqWord = std::vector<UqSymbol>;

/// Formal element of U_q(sl_{n+1}) with n simple roots. No relations of the
/// algebra are applied; only adjacent K symbols are merged and K_0 dropped.
class FormalUq {
public:
    using Terms = std::map<UqWord, LaurentPoly>;

    explicit FormalUq(std::size_t n) : n_(n) {}

    static FormalUq scalar(std::size_t n, const LaurentPoly& c);
    static FormalUq word(std::size_t n, UqWord w, const LaurentPoly& c = 1);
    static FormalUq e(std::size_t n, int i) { return word(n, {UqSymbol::e(i)}); }
    static FormalUq f(std::size_t n, int i) { return word(n, {UqSymbol::f(i)}); }
    static FormalUq k(std::size_t n, MultiIndex v) { return word(n, {UqSymbol::k(std::move(v))}); }

    std::size_t n() const noexcept { return n_; }
    int rank_sl() const noexcept { return static_cast<int>(n_) + 1; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add_term(UqWord w, const LaurentPoly& c);

    FormalUq& operator+=(const FormalUq& rhs);
    FormalUq& operator-=(const FormalUq& rhs);
    FormalUq& operator*=(const LaurentPoly& c);
    friend FormalUq operator+(FormalUq a, const FormalUq& b) { return a += b; }
    friend FormalUq operator-(FormalUq a, const FormalUq& b) { return a -= b; }
    friend FormalUq operator*(const LaurentPoly& c, FormalUq a) { return a *= c; }
    friend FormalUq operator-(FormalUq a) { return a *= LaurentPoly(-1); }
    friend FormalUq operator*(const FormalUq& a, const FormalUq& b);

    friend bool operator==(const FormalUq&, const FormalUq&) = default;

private:
    std::size_t n_;
    Terms terms_;
};

/// Braid symmetry T_i, extended multiplicatively:
///   E_i -> -F_i K_i^-1            F_i -> -K_i E_i
///   E_j -> E_i E_j - q E_j E_i    F_j -> F_j F_i - q^-1 F_i F_j   (|i-j| = 1)
///   E_j, F_j fixed                                                 (|i-j| > 1)
///   K_v -> K_{v - (sum_j a_ij v_j) eps_i}
FormalUq lusztig_T(int i, const FormalUq& x);

/// Substitutes the realized generators of r.
Operator evaluate(const FormalUq& x, const Realization& r);

/// "E1 E2 - q E2 E1", "-F1 K(-1,0)".
std::string to_expression(const FormalUq& x);
std::ostream& operator<<(std::ostream& os, const FormalUq& x);

/// Sequence of simple reflection indices.
using BraidWord = std::vector<int>;

/// s_1 (s_2 s_1) (s_3 s_2 s_1) ... (s_n ... s_1), a reduced word for the
/// longest element of the symmetric group S_{n+1}.
BraidWord default_reduced_word(int n);

/// Throws InvalidIndex for indices outside 1..n and InvalidArgs unless w is a
/// reduced word for the longest element.
void validate_reduced_word(const BraidWord& w, int n);

/// The positive root s_{i_1} ... s_{i_{p-1}}(alpha_{i_p}) = eps_a - eps_b,
/// returned as (a, b) with a < b.
std::pair<int, int> prefix_root(const BraidWord& w, int p);

enum class RootSign { Positive, Negative };

/// T_{i_1} ... T_{i_{p-1}} applied to E(i_p) or F(i_p); the innermost
/// symmetry T_{i_{p-1}} is applied first.
FormalUq braid_root_vector(int p, const BraidWord& w, RootSign sign, int n);

/// T_iT_jT_i = T_jT_iT_j on E_k, F_k, K_{eps_k}, T_iT_j(E_i) = E_j for
/// |i-j| = 1, and T_i(E_j) = E_j for |i-j| > 1, all after evaluation.
VerificationReport braid_relation_check(int n, int degree);

/// [e_{sj}, T_s(E_s)]_q = e_{s+1,j} and [T_s(F_s), e_{js}]_{q^-1} = e_{j,s+1}
/// for s + 1 < j <= n + 1, plus T_s(E_s) = -f_s K_s^-1.
VerificationReport lemma34_check(int n, int degree);

/// Every braid-built root vector along w against root_op: E-side vectors
/// against e_{ab}, F-side vectors against e_{ba}. A mismatch note carries
/// the per-monomial ratio when it is a Laurent polynomial.
VerificationReport theorem33_check(int n, int degree, const BraidWord& w);
VerificationReport theorem33_check(int n, int degree);

} // namespace qweyl
