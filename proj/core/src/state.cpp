#include "jcsim/state.hpp"

#include <stdexcept>

#include "jcsim/linalg.hpp"

namespace jcsim {

BlockDensityMatrix BlockDensityMatrix::zero(int dim) {
  BlockDensityMatrix r;
  r.b00 = ComplexMatrix::Zero(dim, dim);
  r.b01 = ComplexMatrix::Zero(dim, dim);
  r.b10 = ComplexMatrix::Zero(dim, dim);
  r.b11 = ComplexMatrix::Zero(dim, dim);
  return r;
}

ComplexMatrix BlockDensityMatrix::assembled() const {
  const int d = dim();
  ComplexMatrix full(2 * d, 2 * d);
  full.block(0, 0, d, d) = b00;
  full.block(0, d, d, d) = b01;
  full.block(d, 0, d, d) = b10;
  full.block(d, d, d, d) = b11;
  return full;
}

VectorizedState stackBlocks(const BlockDensityMatrix& rho) {
  const int d = rho.dim();
  const int n2 = d * d;
  VectorizedState v;
  v.blockDim = d;
  v.data.resize(4 * n2);
  v.data.segment(0 * n2, n2) = vectorize(rho.b00);
  v.data.segment(1 * n2, n2) = vectorize(rho.b01);
  v.data.segment(2 * n2, n2) = vectorize(rho.b10);
  v.data.segment(3 * n2, n2) = vectorize(rho.b11);
  return v;
}

BlockDensityMatrix splitBlocks(const VectorizedState& v) {
  validate(v);
  const int d = v.blockDim;
  const int n2 = d * d;
  BlockDensityMatrix rho;
  rho.b00 = unvectorize(v.data.segment(0 * n2, n2), d);
  rho.b01 = unvectorize(v.data.segment(1 * n2, n2), d);
  rho.b10 = unvectorize(v.data.segment(2 * n2, n2), d);
  rho.b11 = unvectorize(v.data.segment(3 * n2, n2), d);
  return rho;
}

void validate(const VectorizedState& v) {
  if (v.blockDim <= 0 ||
      v.data.size() != 4 * static_cast<Eigen::Index>(v.blockDim) * v.blockDim)
    throw std::invalid_argument(
        "VectorizedState: data length must be 4*blockDim^2");
}

}  // namespace jcsim
