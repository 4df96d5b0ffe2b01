#pragma once

#include "thermalops/linalg.hpp"

namespace thermalops {

// Hermitian observable with a cached spectral decomposition. Eigenvalues are
// ascending; near-degenerate levels (within kDegeneracyTol) share a block.
class Hamiltonian {
 public:
  explicit Hamiltonian(ComplexMatrix matrix);

  // Diagonal Hamiltonian in the computational basis with the given levels.
  static Hamiltonian fromSpectrum(const RealVector& levels);

  const ComplexMatrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  Index dim() const { return matrix_.rows(); }
  bool isDegenerate() const;

 private:
  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
};

// Unit-trace positive semidefinite state. Validation bounds: trace within
// kTraceTol of one, Hermiticity within kHermitianTol, eigenvalues no lower
// than -kEigenvalueClamp (then clamped to zero for spectral queries).
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& matrix);

  static DensityMatrix pure(const ComplexVector& amplitudes);
  static DensityMatrix diagonal(const RealVector& probabilities);
  static DensityMatrix maximallyMixed(Index dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  // Spectrum with negative round-off clamped to zero.
  const RealVector& probabilities() const { return probabilities_; }
  Index dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
  RealVector probabilities_;
};

// Thermal state exp(-beta H)/Z, computed with shifted weights so that large
// spectra do not underflow. beta must be nonnegative and finite; beta = 0
// gives the maximally mixed state.
DensityMatrix gibbsState(const Hamiltonian& h, double beta);

// ln Z = -beta*E_min + ln(sum_k exp(-beta*(E_k - E_min))).
double logPartition(const Hamiltonian& h, double beta);

// Pure state with thermal weights: sum_k sqrt(p_k^gibbs) |E_k>. Only defined
// for nondegenerate spectra; degenerate input raises DegenerateSpectrumError.
DensityMatrix coherentGibbsState(const Hamiltonian& h, double beta);

// Tr(P_E rho) for each energy block of h, in ascending-energy order.
RealVector populations(const DensityMatrix& rho, const Hamiltonian& h);

// Von Neumann entropy in nats, with 0*ln(0) = 0.
double vonNeumannEntropy(const DensityMatrix& rho);

// Quantum relative entropy S(rho||sigma) in nats. Returns +infinity when rho
// places more than kTraceTol of weight outside the support of sigma.
double relativeEntropy(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace thermalops
