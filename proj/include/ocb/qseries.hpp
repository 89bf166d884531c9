#pragma once

#include <vector>

#include "ocb/laurent.hpp"

namespace ocb {

// prod_{n>=1} (1 - q^{delta n})^e to O(q^trunc). Uses the pentagonal number
// theorem for e = 1, the partition recurrence for e = -1 and binary powering
// otherwise.
LaurentSeries euler_product(int delta, int e, int trunc);

// p(0), ..., p(count-1).
std::vector<Integer> partition_numbers(int count);

// sum_{n>=0} p(a n + b) q^n to O(q^trunc).
LaurentSeries partition_slice(int a, int b, int trunc);

// 1 + 240 sum sigma_3(n) q^n.
LaurentSeries eisenstein_e4(int trunc);
// q prod (1 - q^n)^24.
LaurentSeries modular_discriminant(int trunc);
// E4^3 / Delta = q^-1 + 744 + ...
LaurentSeries klein_j(int trunc);

}  // namespace ocb
