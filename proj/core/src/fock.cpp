#include "jcsim/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "jcsim/linalg.hpp"

namespace jcsim {

void validate(const TruncationConfig& cfg) {
  if (cfg.dim < 2)
    throw std::invalid_argument("TruncationConfig: dim must be >= 2");
  if (cfg.margin < 0 || cfg.margin > cfg.dim - 2)
    throw std::invalid_argument(
        "TruncationConfig: margin must satisfy 0 <= margin <= dim - 2");
}

ComplexMatrix annihilation(const TruncationConfig& cfg) {
  validate(cfg);
  ComplexMatrix a = ComplexMatrix::Zero(cfg.dim, cfg.dim);
  for (int n = 1; n < cfg.dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

ComplexMatrix creation(const TruncationConfig& cfg) {
  return annihilation(cfg).adjoint();
}

ComplexMatrix numberOperator(const TruncationConfig& cfg) {
  validate(cfg);
  ComplexMatrix n = ComplexMatrix::Zero(cfg.dim, cfg.dim);
  for (int k = 0; k < cfg.dim; ++k) n(k, k) = double(k);
  return n;
}

ComplexMatrix fockIdentity(const TruncationConfig& cfg) {
  validate(cfg);
  return ComplexMatrix::Identity(cfg.dim, cfg.dim);
}

ComplexMatrix marginProjector(const TruncationConfig& cfg) {
  validate(cfg);
  ComplexMatrix p = ComplexMatrix::Zero(cfg.dim, cfg.dim);
  for (int n = 0; n + cfg.margin < cfg.dim; ++n) p(n, n) = 1.0;
  return p;
}

ComplexMatrix pairMarginProjector(const TruncationConfig& cfg) {
  const ComplexMatrix p = marginProjector(cfg);
  return kron(p, p);
}

}  // namespace jcsim
