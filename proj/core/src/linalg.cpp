#include "jcsim/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace jcsim {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

ComplexVector vectorize(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("vectorize: input must be square");
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvectorize(const ComplexVector& v, int dim) {
  if (dim <= 0 || v.size() != static_cast<Eigen::Index>(dim) * dim)
    throw std::invalid_argument("unvectorize: length does not match dim*dim");
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

ComplexMatrix expm(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("expm: input must be square");
  const Eigen::Index n = m.rows();

  double norm = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    norm = std::max(norm, m.row(i).cwiseAbs().sum());

  int squarings = 0;
  while (norm > 0.5 && squarings < 64) {
    norm *= 0.5;
    ++squarings;
  }
  const ComplexMatrix scaled = m / std::pow(2.0, squarings);

  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  bool converged = false;
  constexpr int kMaxTerms = 64;
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    sum += term;
    if (maxAbs(term) < 1e-18 * std::max(1.0, maxAbs(sum))) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw std::runtime_error("expm: Taylor series did not converge");

  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  requireFinite(sum, "expm result");
  return sum;
}

double maxAbs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double maxAbs(const ComplexVector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

double maxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return maxAbs(ComplexMatrix(a - b));
}

void requireFinite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite())
    throw std::runtime_error(std::string(what) + ": non-finite entries");
}

void requireFinite(const ComplexVector& v, const char* what) {
  if (!v.allFinite())
    throw std::runtime_error(std::string(what) + ": non-finite entries");
}

}  // namespace jcsim
