#pragma once

#include "jcsim/fock.hpp"
#include "jcsim/types.hpp"

namespace jcsim {

/// Physical parameters of the damped Jaynes-Cummings model: qubit/cavity
/// frequency omega0, coupling Omega, cavity damping rate mu and incoherent
/// pump rate nu. The model requires mu > nu >= 0; the equal-rate limit
/// mu == nu is rejected (the relaxation functions become 0/0 there).
struct ModelParams {
  double omega0 = 1.0;
  double Omega = 0.5;
  double mu = 0.3;
  double nu = 0.1;
  TruncationConfig trunc;
};

void validate(const ModelParams& p);

/// The 2x2 operator blocks of the Jaynes-Cummings Hamiltonian:
/// a = omega0/2 + omega0*N, b = Omega*a_low, c = Omega*a_low^dag,
/// d = -omega0/2 + omega0*N.  a and d are Hermitian, c = b^dag.
struct HamiltonianBlocks {
  ComplexMatrix a, b, c, d;
};

HamiltonianBlocks hamiltonianBlocks(const ModelParams& p);

/// su(1,1) generators on the doubled (vectorized) space:
/// kPlus = a^dag (x) a^T, kMinus = a (x) (a^dag)^T,
/// k3 = (N (x) 1 + 1 (x) N + 1 (x) 1) / 2, k0 = N (x) 1 - 1 (x) N.
struct Su11Generators {
  ComplexMatrix kPlus, kMinus, k3, k0;
};

Su11Generators su11Generators(const TruncationConfig& cfg);

/// Coherent part of the vectorized generator: the 4x4-block superoperator
/// (4*dim^2 square) implementing -i[H, rho] after vectorization; Hermitian.
ComplexMatrix coherentSuperop(const ModelParams& p);

/// Single-block dissipator L = nu*K+ + mu*K- - (mu+nu)*K3 + (mu-nu)/2,
/// dim^2 square. The pump anticommutator uses a a^dag = N + 1; see README
/// notes on the truncation boundary.
ComplexMatrix dissipatorBlock(const ModelParams& p);

/// Block-diagonal dissipative part, diag(L, L, L, L) = I4 (x) L.
ComplexMatrix dissipativeSuperop(const ModelParams& p);

/// Full generator -i * coherentSuperop + dissipativeSuperop, so that
/// d/dt vec(rho) = liouvillian(p) * vec(rho).
ComplexMatrix liouvillian(const ModelParams& p);

/// Conjugate by the permutation that swaps the middle two of the four
/// dim^2 blocks (block indices 1 <-> 2). Involutive.
ComplexMatrix swapMiddleBlocks(const ComplexMatrix& m, int blockSize);

/// 4*dim^2 projector applying pairMarginProjector on each of the 4 blocks.
ComplexMatrix superopMarginProjector(const TruncationConfig& cfg);

}  // namespace jcsim
