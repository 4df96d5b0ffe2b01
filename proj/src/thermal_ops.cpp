#include "thermalops/thermal_ops.hpp"

#include <cmath>
#include <random>
#include <string>

namespace thermalops {

namespace {

ComplexMatrix tensorSum(const Hamiltonian& a, const Hamiltonian& b) {
  const ComplexMatrix ia = ComplexMatrix::Identity(a.dim(), a.dim());
  const ComplexMatrix ib = ComplexMatrix::Identity(b.dim(), b.dim());
  return tensorProduct(a.matrix(), ib) + tensorProduct(ia, b.matrix());
}

// Haar-distributed unitary via QR of a complex Ginibre matrix with the phase
// of diag(R) divided out (otherwise Q is not uniform).
ComplexMatrix haarBlock(Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? (d / mag) : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace

BipartiteSetup::BipartiteSetup(Hamiltonian systemH, Hamiltonian bathH, double beta)
    : systemH_(std::move(systemH)),
      bathH_(std::move(bathH)),
      totalH_(tensorSum(systemH_, bathH_)),
      beta_(beta),
      systemGibbs_(gibbsState(systemH_, beta)),
      bathGibbs_(gibbsState(bathH_, beta)) {}

ThermalOperation::ThermalOperation(BipartiteSetup setup, ComplexMatrix unitary)
    : setup_(std::move(setup)), unitary_(std::move(unitary)) {
  if (unitary_.rows() != setup_.dimTotal() || unitary_.cols() != setup_.dimTotal()) {
    throw DimensionMismatchError("ThermalOperation: unitary dimension " +
                                 std::to_string(unitary_.rows()) +
                                 " does not match composite dimension " +
                                 std::to_string(setup_.dimTotal()));
  }
  const ComplexMatrix identity = ComplexMatrix::Identity(unitary_.rows(), unitary_.cols());
  unitarityDeviation_ = maxAbs(unitary_.adjoint() * unitary_ - identity);
  if (unitarityDeviation_ > kUnitaryTol) {
    throw NotUnitaryError("ThermalOperation: u'u deviates from identity by " +
                          std::to_string(unitarityDeviation_));
  }
  const ComplexMatrix& h = setup_.totalHamiltonian().matrix();
  commutatorDeviation_ = maxAbs(unitary_ * h - h * unitary_);
  if (commutatorDeviation_ > kUnitaryTol) {
    throw DomainError("ThermalOperation: [u, hTotal] deviates from zero by " +
                      std::to_string(commutatorDeviation_) +
                      "; the unitary is not energy preserving");
  }
}

namespace {

ProcessOutcome conjugateProduct(const BipartiteSetup& setup,
                                const ComplexMatrix& u,
                                const DensityMatrix& rhoS,
                                const DensityMatrix& rhoB,
                                bool bathIsThermal) {
  if (rhoS.dim() != setup.dimSystem()) {
    throw DimensionMismatchError("apply: system state dimension " +
                                 std::to_string(rhoS.dim()) + " is not " +
                                 std::to_string(setup.dimSystem()));
  }
  if (rhoB.dim() != setup.dimBath()) {
    throw DimensionMismatchError("apply: bath state dimension " +
                                 std::to_string(rhoB.dim()) + " is not " +
                                 std::to_string(setup.dimBath()));
  }
  const ComplexMatrix rhoIn = tensorProduct(rhoS.matrix(), rhoB.matrix());
  const ComplexMatrix rhoOut = hermitize(u * rhoIn * u.adjoint());
  DensityMatrix joint(rhoOut);
  DensityMatrix marginalS(hermitize(
      partialTrace(rhoOut, setup.dimSystem(), setup.dimBath(), Subsystem::System)));
  DensityMatrix marginalB(hermitize(
      partialTrace(rhoOut, setup.dimSystem(), setup.dimBath(), Subsystem::Bath)));
  return ProcessOutcome{setup,  rhoS,      rhoB,
                        bathIsThermal, std::move(joint), std::move(marginalS),
                        std::move(marginalB)};
}

}  // namespace

ProcessOutcome applyTO(const ThermalOperation& op, const DensityMatrix& rhoS) {
  return conjugateProduct(op.setup(), op.unitary(), rhoS,
                          op.setup().bathGibbs(), /*bathIsThermal=*/true);
}

ProcessOutcome applyGeneralUnitary(const BipartiteSetup& setup,
                                   const ComplexMatrix& u,
                                   const DensityMatrix& rhoS,
                                   const DensityMatrix& rhoB) {
  if (u.rows() != setup.dimTotal() || u.cols() != setup.dimTotal()) {
    throw DimensionMismatchError("applyGeneralUnitary: unitary dimension mismatch");
  }
  const ComplexMatrix identity = ComplexMatrix::Identity(u.rows(), u.cols());
  const double deviation = maxAbs(u.adjoint() * u - identity);
  if (deviation > kUnitaryTol) {
    throw NotUnitaryError("applyGeneralUnitary: u'u deviates from identity by " +
                          std::to_string(deviation));
  }
  const bool thermal = maxAbs(rhoB.matrix() - setup.bathGibbs().matrix()) <= kTraceTol;
  return conjugateProduct(setup, u, rhoS, rhoB, thermal);
}

ThermalOperation randomEnergyPreservingUnitary(const BipartiteSetup& setup,
                                               std::uint64_t seed) {
  const SpectralDecomposition& s = setup.totalHamiltonian().spectrum();
  std::mt19937_64 rng(seed);
  ComplexMatrix blockDiag = ComplexMatrix::Zero(s.dim(), s.dim());
  for (const BlockRange& b : s.blocks) {
    blockDiag.block(b.begin, b.begin, b.size(), b.size()) = haarBlock(b.size(), rng);
  }
  ComplexMatrix u = s.eigenvectors * blockDiag * s.eigenvectors.adjoint();
  return ThermalOperation(setup, std::move(u));
}

ThermalOperation partialSwapUnitary(const BipartiteSetup& setup, double theta) {
  const Index d = setup.dimSystem();
  if (setup.dimBath() != d) {
    throw NotResonantError("partialSwapUnitary: system and bath dimensions differ");
  }
  const RealVector& eS = setup.systemHamiltonian().spectrum().eigenvalues;
  const RealVector& eB = setup.bathHamiltonian().spectrum().eigenvalues;
  const double spectrumGap = (eS - eB).cwiseAbs().maxCoeff();
  if (spectrumGap > kDegeneracyTol) {
    throw NotResonantError("partialSwapUnitary: sorted spectra differ by " +
                           std::to_string(spectrumGap));
  }
  // SWAP of energy eigenmodes, expressed in the computational basis through
  // the paired eigenvector frame W = V_S (x) V_B.
  ComplexMatrix swapEnergy = ComplexMatrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      swapEnergy(i * d + j, j * d + i) = 1.0;
    }
  }
  const ComplexMatrix w = tensorProduct(setup.systemHamiltonian().spectrum().eigenvectors,
                                        setup.bathHamiltonian().spectrum().eigenvectors);
  const ComplexMatrix swap = w * swapEnergy * w.adjoint();
  const Index dim = d * d;
  ComplexMatrix u = std::cos(theta) * ComplexMatrix::Identity(dim, dim) -
                    Complex(0.0, 1.0) * std::sin(theta) * swap;
  return ThermalOperation(setup, std::move(u));
}

ThermalOperation identityOperation(const BipartiteSetup& setup) {
  return ThermalOperation(setup, ComplexMatrix::Identity(setup.dimTotal(),
                                                         setup.dimTotal()));
}

ComplexMatrix haarUnitary(Index dim, std::uint64_t seed) {
  if (dim <= 0) throw DomainError("haarUnitary: dimension must be positive");
  std::mt19937_64 rng(seed);
  return haarBlock(dim, rng);
}

DensityMatrix randomMixedState(Index dim, std::uint64_t seed) {
  if (dim <= 0) throw DomainError("randomMixedState: dimension must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  ComplexMatrix w = g * g.adjoint();
  return DensityMatrix(hermitize(w / w.trace().real()));
}

CovarianceCheck checkTimeTranslationCovariance(const ThermalOperation& op,
                                               const DensityMatrix& rhoS,
                                               double time, double tol) {
  const BipartiteSetup& setup = op.setup();
  const SpectralDecomposition& s = setup.systemHamiltonian().spectrum();
  const ComplexMatrix phase = spectralMap(
      s, [time](double e) { return std::exp(Complex(0.0, -e * time)); });

  const DensityMatrix rhoRotated(hermitize(phase * rhoS.matrix() * phase.adjoint()));
  const ComplexMatrix evolveFirst = applyTO(op, rhoRotated).rhoPrimeS.matrix();
  const ComplexMatrix channelFirst =
      phase * applyTO(op, rhoS).rhoPrimeS.matrix() * phase.adjoint();

  const double deviation = maxAbs(evolveFirst - channelFirst);
  return CovarianceCheck{deviation <= tol, deviation};
}

}  // namespace thermalops
