#include "qweyl/random_ops.hpp"

#include "qweyl/errors.hpp"

namespace qweyl {

GenSymbol random_generator(std::mt19937_64& rng, int n) {
    if (n < 1) {
        throw InvalidArgs("n must be >= 1");
    }
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<int> index(1, n);
    switch (kind(rng)) {
    case 0:
        return GenSymbol::x(index(rng));
    case 1:
        return GenSymbol::d(index(rng));
    case 2:
        return GenSymbol::sigma(index(rng), 1);
    case 3:
        return GenSymbol::sigma(index(rng), -1);
    default: {
        std::uniform_int_distribution<int> entry(-1, 1);
        MultiIndex mu(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < mu.rank(); ++k) {
            mu[k] = entry(rng);
        }
        return GenSymbol::theta(std::move(mu));
    }
    }
}

Operator random_operator(std::mt19937_64& rng, int n, int max_length, int max_terms) {
    if (max_length < 0 || max_terms < 1) {
        throw InvalidArgs("random_operator: bad size bounds");
    }
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> length(0, max_length);
    std::uniform_int_distribution<int> power(-2, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    Operator op(static_cast<std::size_t>(n));
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        Word w;
        const int len = length(rng);
        for (int k = 0; k < len; ++k) {
            w.push_back(random_generator(rng, n));
        }
        op.add_term(std::move(w), LaurentPoly::monomial(power(rng), sign(rng) ? 1 : -1));
    }
    return op;
}

} // namespace qweyl
