#pragma once

#include "qweyl/divided_power.hpp"
#include "qweyl/multi_index.hpp"
#include "qweyl/report.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

/// Root-vector operator e_{ij} on A_q(n), 1 <= i != j <= n+1:
///   i < j <= n    x_i d_j s_i
///   j < i <= n    s_j^-1 x_i d_j
///   j = n+1       (prod_{k != i} s_k^-1) x_i sum_k x_k d_k Theta(eps_k)
///   i = n+1       -d_j prod_{k != j} s_k
/// Throws InvalidIndex otherwise.
Operator root_op(int i, int j, int n);

/// Image of x^(beta) under root_op(i, j, beta.rank()) from the closed forms
///   i < j <= n    q^(-sum_{i<s<j} b_s) [b_i + 1] x^(b + eps_i - eps_j)
///   j < i <= n    q^(sum_{j<s<i} b_s) [b_i + 1] x^(b - eps_j + eps_i)
///   j = n+1       q^(-sum_{k>i} b_k) [b_i + 1] weight_sum(b) x^(b + eps_i)
///   i = n+1       -q^(sum_{k>j} b_k) x^(b - eps_j)
Element closed_form_root_action(int i, int j, const MultiIndex& beta);

/// Word actions of every root_op(i, j) against closed_form_root_action.
VerificationReport root_oracle_check(int n, int degree);

/// q-bracket descriptions of the root vectors through the extra variable:
///   P1:s        e_{s,n+1} = [e_{s,s+1}, e_{s+1,n+1}]_q
///   P2:s,j      e_{s,n+1} = [e_{s,j}, e_{j,n+1}]_q           for s < j <= n
///   P3:s,j      e_{n+1,s} = [e_{n+1,j}, e_{j,s}]_{q^-1}
///   P2-indep / P3-indep   the brackets for j and s+1 act identically
///   P4:s        [e_{s,n+1}, e_{n+1,s}] = (K - K^-1)/(q - q^-1), K = (prod s_i) s_s
///   P4-eigen:s  that quotient acts by [b_s + |b|]
///   P4-K:s      (prod s_i) s_s = K_s K_{s+1} ... K_n
/// Requires n >= 2.
VerificationReport prop32_check(int n, int degree);

} // namespace qweyl
