#pragma once

#include <string>
#include <vector>

#include "ocb/basis_rr.hpp"

namespace ocb {

struct DecompositionTerm {
  size_t index = 0;  // entry of the order complete basis
  int pole_order = 0;
  Poly coeff;  // polynomial in t
};

// target - sum coeff_k(t) b_k = O(q^certified_to); residual_valuation is the
// valuation of the remainder (equal to certified_to when it vanishes).
struct Decomposition {
  std::vector<DecompositionTerm> terms;
  int residual_valuation = 0;
  int certified_to = 0;
  bool exact() const { return residual_valuation >= certified_to; }
};

// Greedy pole cancellation with t^k b_i, preferring the largest o_i. Throws
// GapError when a pole order is not reachable and PrecisionError when the
// inputs are known to less than O(q^window).
Decomposition express(const LaurentSeries& target, const OrderCompleteBasis& basis, const LaurentSeries& ts,
                      int window = 50);

// sum coeff_k(x) expr_k.
FieldElement closed_form(const Decomposition& dec, const OrderCompleteBasis& basis, const FieldPtr& k);

// Valuation of lhs - rhs to O(q^trunc); the identity holds to that precision
// iff the result is >= trunc.
int verify_identity(const Recipe& lhs, const FieldElement& rhs, const Generators& gens, int trunc);
int verify_identity(const LaurentSeries& lhs, const FieldElement& rhs, const Generators& gens, int trunc);

// All n < count with p(a n + b) not divisible by m.
std::vector<int> check_congruence(int a, int b, int m, int count);

std::string to_json(const Decomposition& dec);

}  // namespace ocb
