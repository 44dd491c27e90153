#pragma once

#include "qweyl/divided_power.hpp"
#include "qweyl/laurent.hpp"
#include "qweyl/report.hpp"
#include "qweyl/weyl.hpp"

#include <string>
#include <vector>

namespace qweyl {

/// Chevalley generator families of U_q(sl_{n+1}).
enum class Chevalley { E, F, K, KInv };

std::string to_string(Chevalley g);

/// Type A_n Cartan matrix: 2 on the diagonal, -1 for |i-j| = 1.
class CartanMatrix {
public:
    explicit CartanMatrix(int n) : n_(n) {}
    int size() const noexcept { return n_; }
    /// 1-based entries.
    int operator()(int i, int j) const;

private:
    int n_;
};

/// U_q(sl_{n+1}) acting on A_q(n) by quantum differential operators.
///
/// For i < n the generators are e_i = x_i d_{i+1} s_i, f_i = s_i^-1 x_{i+1} d_i,
/// K_i = s_i s_{i+1}^-1. The n-th generators raise or lower total degree:
///   e_n = (prod_{i<n} s_i^-1) x_n sum_i x_i d_i Theta(eps_i)
///   f_n = -d_n prod_{i<n} s_i
///   K_n = s_n prod_i s_i
struct Realization {
    int n = 0;
    std::vector<Operator> e;
    std::vector<Operator> f;
    std::vector<Operator> K;
    std::vector<Operator> K_inv;

    int rank_sl() const noexcept { return n + 1; }
    /// 1-based.
    const Operator& generator(Chevalley g, int i) const;
};

Realization build_realization(int n);

/// sum_k theta(eps_k, beta) [beta_k], the eigenvalue of sum_k x_k d_k Theta(eps_k).
LaurentPoly weight_sum(const MultiIndex& beta);

/// Image of x^(beta) under generator g_i of build_realization(beta.rank()),
/// computed from the closed forms rather than by composing words:
///   e_i: [b_i + 1] x^(b + eps_i - eps_{i+1})         (i < n)
///   f_i: [b_{i+1} + 1] x^(b - eps_i + eps_{i+1})     (i < n)
///   K_i: q^(b_i - b_{i+1})                           (i < n)
///   e_n: [b_n + 1] weight_sum(b) x^(b + eps_n)
///   f_n: -x^(b - eps_n)
///   K_n: q^(|b| + b_n)
/// Shifts leaving Z_+^n give zero.
Element closed_form_action(Chevalley g, int i, const MultiIndex& beta);

/// Word actions against closed_form_action for every generator.
VerificationReport oracle_check(int n, int degree);

/// (R1)-(R7) for the realization, as exact action identities on |beta| <= degree.
VerificationReport verify_serre(int n, int degree);
VerificationReport verify_serre(const Realization& r, int degree);

/// U_q(gl_n) relations with k_i = sigma_i against the rank-n e_j, f_j (j < n).
VerificationReport verify_gl(int n, int degree);

/// Invariance of weight_sum under beta -> beta + m (eps_i - eps_{i+1}), over
/// every lattice-valid (beta, i, m) with |beta| <= degree and |m| <= max_shift.
VerificationReport lemma21_check(int n, int degree, int max_shift = 3);

/// At q = 1 every generator acts as the classical sl_{n+1} operator on the
/// divided power algebra (e_n -> x_n sum x_i d_i, f_n -> -d_n, K -> 1).
VerificationReport classical_degeneration_check(int n, int degree);
VerificationReport classical_degeneration_check(const Realization& r, int degree);

} // namespace qweyl
