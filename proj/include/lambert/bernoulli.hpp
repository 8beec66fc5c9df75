#pragma once

#include <gmpxx.h>

#include <vector>

namespace lambert {

// Exact Bernoulli numbers B_0..B_{2K} in the convention of the generating
// function t·e^{tx}/(e^t − 1) at x = 0, i.e. B_1 = −1/2.
struct BernoulliCache {
    int max_index = 0;               // 2K
    std::vector<mpq_class> exact;    // B_0 .. B_{2K}, index = subscript
    std::vector<double> approx;      // binary-float images of the same
};

// Recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0, solved for B_m exactly. K <= 200.
BernoulliCache bernoulli_numbers(int count_k);

}  // namespace lambert
