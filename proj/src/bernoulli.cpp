#include "lambert/bernoulli.hpp"

#include <stdexcept>

namespace lambert {

BernoulliCache bernoulli_numbers(int count_k) {
    if (count_k < 0 || count_k > 200)
        throw std::invalid_argument("bernoulli_numbers: K must be in [0, 200]");

    int top = 2 * count_k;
    BernoulliCache cache;
    cache.max_index = top;
    cache.exact.resize(top + 1);
    cache.exact[0] = 1;

    // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -(1/(m+1)) sum_{j<m} C(m+1,j) B_j
    for (int m = 1; m <= top; ++m) {
        mpq_class acc = 0;
        mpz_class binom = 1;  // C(m+1, j), updated incrementally over j
        for (int j = 0; j < m; ++j) {
            acc += binom * cache.exact[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        cache.exact[m] = -acc / (m + 1);
    }

    cache.approx.reserve(top + 1);
    for (const mpq_class& b : cache.exact) cache.approx.push_back(b.get_d());
    return cache;
}

}  // namespace lambert
