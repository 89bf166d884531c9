#pragma once

#include <vector>

#include "ocb/poly.hpp"

namespace ocb {

// Raised when Q[x]/(D), treated as a field, turns out to have a zero divisor;
// factor is a proper monic divisor of D.
struct SplitFound {
  Poly factor;
};

struct ResidueKernel {
  // vecs[k] has a 1 in column free[k], 0 in the other free columns, and
  // entries reduced modulo D elsewhere.
  std::vector<std::vector<Poly>> vecs;
  std::vector<size_t> free;
};

// Right kernel {u : A u = 0} of a matrix with `cols` columns over Q[x]/(D),
// D monic and squarefree, from reduced row echelon form. Computed modulo word
// primes, reconstructed over Q and checked exactly.
ResidueKernel residue_kernel(const std::vector<std::vector<Poly>>& a, size_t cols, const Poly& d);

// Same result by Gauss-Jordan elimination over Q; slow on large inputs.
ResidueKernel residue_kernel_exact(std::vector<std::vector<Poly>> a, size_t cols, const Poly& d);

}  // namespace ocb
