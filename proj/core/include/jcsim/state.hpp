#pragma once

#include "jcsim/types.hpp"

namespace jcsim {

/// Density matrix of the qubit-cavity system in 2x2 block form. Block index 0
/// is the excited qubit state, index 1 the ground state; each block is a
/// dim x dim cavity operator.
struct BlockDensityMatrix {
  ComplexMatrix b00, b01, b10, b11;

  int dim() const { return static_cast<int>(b00.rows()); }

  static BlockDensityMatrix zero(int dim);

  /// The full 2*dim x 2*dim matrix [[b00, b01], [b10, b11]].
  ComplexMatrix assembled() const;
};

/// The four blocks stacked as row-major vectors in the order
/// (b00; b01; b10; b11), total length 4*dim^2.
struct VectorizedState {
  int blockDim = 0;
  ComplexVector data;
};

VectorizedState stackBlocks(const BlockDensityMatrix& rho);
BlockDensityMatrix splitBlocks(const VectorizedState& v);

/// Throws std::invalid_argument unless data length is 4*blockDim^2.
void validate(const VectorizedState& v);

}  // namespace jcsim
