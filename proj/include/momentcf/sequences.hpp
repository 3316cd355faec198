#pragma once

#include <vector>

#include "momentcf/contfrac.hpp"
#include "momentcf/rational.hpp"

namespace momentcf {

/// B_0..B_n from sum_{k<=m} C(m+1,k) B_k = 0, so B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(long n);
Rational bernoulli(long n);

/// G_n = 2(2^n - 1)|B_n| for even n >= 2; Error(kOddIndex) otherwise.
Rational genocchi(long n);

/// H_{2n+1}: H_1 = 1 and the alternating binomial sum of Genocchi numbers.
Rational median_genocchi(long n);

/// S(t; 1·1, 1·2, 2·2, 2·3, ...), whose coefficients are G_{2n+2}.
SFrac<Rational> genocchi_sfrac(std::size_t depth);

/// S(t; 1², 1², 2², 2², ...), whose coefficients are H_{2n+1}.
SFrac<Rational> median_genocchi_sfrac(std::size_t depth);

/// J(t; 2·1², (1·2)², 2·2², (2·3)², ...).
JFrac<Rational> median_genocchi_jfrac(std::size_t depth);

}  // namespace momentcf
