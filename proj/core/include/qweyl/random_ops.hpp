#pragma once

#include "qweyl/weyl.hpp"

#include <random>

namespace qweyl {

/// Random generator of W_q(2n): x_i, d_i, sigma_i^{+-1}, or Theta(mu) with
/// entries of mu in -1..1.
GenSymbol random_generator(std::mt19937_64& rng, int n);

/// Sum of 1..max_terms random words of length 0..max_length with small
/// coefficients +-q^k, |k| <= 2.
Operator random_operator(std::mt19937_64& rng, int n, int max_length, int max_terms = 3);

} // namespace qweyl
