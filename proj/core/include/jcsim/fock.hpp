#pragma once

#include "jcsim/types.hpp"

namespace jcsim {

/// Finite Fock-space truncation, states |0> ... |dim-1>. `margin` is the
/// number of top levels excluded when asserting operator identities that the
/// cutoff breaks (anything that uses [a, a^dag] = 1 fails in the top levels).
struct TruncationConfig {
  int dim = 2;
  int margin = 2;
};

/// Throws std::invalid_argument unless dim >= 2 and 0 <= margin <= dim - 2.
void validate(const TruncationConfig& cfg);

/// Lowering operator, entry (n-1, n) = sqrt(n).
ComplexMatrix annihilation(const TruncationConfig& cfg);

/// Raising operator, conjugate transpose of annihilation().
ComplexMatrix creation(const TruncationConfig& cfg);

/// diag(0, 1, ..., dim-1); equals creation() * annihilation() exactly.
ComplexMatrix numberOperator(const TruncationConfig& cfg);

ComplexMatrix fockIdentity(const TruncationConfig& cfg);

/// Diagonal 0/1 projector keeping levels 0 .. dim-1-margin.
ComplexMatrix marginProjector(const TruncationConfig& cfg);

/// marginProjector (x) marginProjector, dim^2 x dim^2; projects both tensor
/// legs of a superoperator index.
ComplexMatrix pairMarginProjector(const TruncationConfig& cfg);

}  // namespace jcsim
