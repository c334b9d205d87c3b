#pragma once

#include <vector>

namespace shikaku {

/// Upper-tail probability P(X > x) for a chi-square variable with df
/// degrees of freedom, via the regularized incomplete gamma function.
double chi_square_sf(double x, int df);

struct ChiSquareTest {
    double statistic = 0.0;
    int df = 0;
    double p_value = 1.0;
};

/// Goodness-of-fit against the uniform distribution over the bins.
ChiSquareTest chi_square_uniform(const std::vector<long>& counts);

/// Two-sample homogeneity test for equally sized samples.
ChiSquareTest chi_square_two_sample(const std::vector<long>& a,
                                    const std::vector<long>& b);

}  // namespace shikaku
