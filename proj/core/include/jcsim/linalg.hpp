#pragma once

#include "jcsim/types.hpp"

namespace jcsim {

/// Kronecker product, (A (x) B)[i*p+k, j*q+l] = A[i,j] * B[k,l] for B p x q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Row-wise stacking of a square matrix into a vector:
/// (x00, x01, ..., x10, x11, ...)^T. Throws std::invalid_argument for
/// non-square input. With this convention vec(E X F) = (E (x) F^T) vec(X).
ComplexVector vectorize(const ComplexMatrix& m);

/// Inverse of vectorize. v must have length dim*dim.
ComplexMatrix unvectorize(const ComplexVector& v, int dim);

/// Matrix exponential by scaling-and-squaring with a Taylor series on the
/// scaled matrix. The matrix is halved until its infinity norm is below 0.5,
/// so the series is well conditioned also for non-normal input. Throws if the
/// series fails to converge.
ComplexMatrix expm(const ComplexMatrix& m);

double maxAbs(const ComplexMatrix& m);
double maxAbs(const ComplexVector& v);
double maxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws std::runtime_error naming `what` if any entry is NaN or infinite.
void requireFinite(const ComplexMatrix& m, const char* what);
void requireFinite(const ComplexVector& v, const char* what);

}  // namespace jcsim
