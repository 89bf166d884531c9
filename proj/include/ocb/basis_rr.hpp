#pragma once

#include <string>
#include <vector>

#include "ocb/normalize.hpp"

namespace ocb {

struct BasisEntry {
  int pole_order = 0;
  FieldElement expr;
  LaurentSeries series;
};

// Basis of O_K ∩ x^d O_inf whose q-expansions are in reduced echelon form:
// each series is q^-pole_order + ... and every other entry vanishes at that
// exponent. Entries are sorted by increasing pole order.
struct OrderCompleteBasis {
  std::vector<BasisEntry> entries;
  int d_used = 0;
  std::vector<int> gaps;
  int max_order() const { return entries.empty() ? -1 : entries.back().pole_order; }
  // Index of the entry with the given pole order, or -1.
  int find(int pole_order) const;
};

// {x^j b_i : 0 <= j <= d - d_i}.
std::vector<FieldElement> build_Bd(const NormalizedBasis& nb, int d);

// Echelonizes the q-expansions to O(q^trunc).
OrderCompleteBasis ref_basis(const std::vector<FieldElement>& elems, const Generators& gens, int trunc);
OrderCompleteBasis ref_basis(const std::vector<FieldElement>& elems, const LaurentSeries& ts, const LaurentSeries& fs,
                             int trunc);

// ref_basis(build_Bd(nb, d)) with d_used set.
OrderCompleteBasis order_complete_basis(const NormalizedBasis& nb, int d, const Generators& gens, int trunc);

// Smallest d whose B_d reaches pole order >= target.
int min_d_for_order(const NormalizedBasis& nb, int target, const Generators& gens, int trunc);

// JSON with pole orders, expressions (FieldElement text), display strings and
// series coefficients as "num/den" strings from the valuation to trunc.
std::string to_json(const OrderCompleteBasis& b);
OrderCompleteBasis parse_order_complete_basis(const FieldPtr& k, std::string_view json);

}  // namespace ocb
