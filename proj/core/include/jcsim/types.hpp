#pragma once

#include <complex>

#include <Eigen/Dense>

namespace jcsim {

using Complex = std::complex<double>;

/// Dense complex matrix with row-major storage. Row-major is load-bearing:
/// vectorize() is defined as the row-wise stacking of entries, so a flat view
/// of the storage is already the vectorized form.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

inline constexpr Complex kImag{0.0, 1.0};

}  // namespace jcsim
