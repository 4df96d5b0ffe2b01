#include "thermalops/states.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace thermalops {

Hamiltonian::Hamiltonian(ComplexMatrix matrix)
    : matrix_(hermitize(matrix)), spectrum_(eigh(matrix)) {}

Hamiltonian Hamiltonian::fromSpectrum(const RealVector& levels) {
  if (levels.size() == 0) {
    throw DomainError("Hamiltonian::fromSpectrum: empty spectrum");
  }
  ComplexMatrix m = ComplexMatrix::Zero(levels.size(), levels.size());
  for (Index i = 0; i < levels.size(); ++i) m(i, i) = levels[i];
  return Hamiltonian(m);
}

bool Hamiltonian::isDegenerate() const {
  for (const BlockRange& b : spectrum_.blocks) {
    if (b.size() > 1) return true;
  }
  return false;
}

DensityMatrix::DensityMatrix(const ComplexMatrix& matrix)
    : matrix_(matrix), spectrum_(eigh(matrix)) {
  const double traceError = std::abs(matrix.trace() - Complex(1.0, 0.0));
  if (traceError > kTraceTol) {
    throw DomainError("DensityMatrix: trace deviates from one by " +
                      std::to_string(traceError));
  }
  if (spectrum_.eigenvalues.minCoeff() < -kEigenvalueClamp) {
    throw DomainError("DensityMatrix: negative eigenvalue " +
                      std::to_string(spectrum_.eigenvalues.minCoeff()));
  }
  probabilities_ = spectrum_.eigenvalues.cwiseMax(0.0);
}

DensityMatrix DensityMatrix::pure(const ComplexVector& amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("DensityMatrix::pure: amplitudes must have finite nonzero norm");
  }
  ComplexVector psi = amplitudes / norm;
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::diagonal(const RealVector& probabilities) {
  ComplexMatrix m = ComplexMatrix::Zero(probabilities.size(), probabilities.size());
  for (Index i = 0; i < probabilities.size(); ++i) m(i, i) = probabilities[i];
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximallyMixed(Index dim) {
  if (dim <= 0) throw DomainError("DensityMatrix::maximallyMixed: dim must be positive");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

namespace {

// beta = 0 (infinite temperature) is a valid Gibbs weight; negative or
// non-finite beta is not.
void requireThermalBeta(double beta, const char* what) {
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw BetaZeroError(std::string(what) + ": inverse temperature must be nonnegative and finite");
  }
}

}  // namespace

DensityMatrix gibbsState(const Hamiltonian& h, double beta) {
  requireThermalBeta(beta, "gibbsState");
  const RealVector& energies = h.spectrum().eigenvalues;
  const double eMin = energies.minCoeff();
  RealVector weights = (-beta * (energies.array() - eMin)).exp().matrix();
  weights /= weights.sum();
  ComplexMatrix m = h.spectrum().eigenvectors *
                    weights.cast<Complex>().asDiagonal() *
                    h.spectrum().eigenvectors.adjoint();
  return DensityMatrix(hermitize(m));
}

double logPartition(const Hamiltonian& h, double beta) {
  requireThermalBeta(beta, "logPartition");
  const RealVector& energies = h.spectrum().eigenvalues;
  const double eMin = energies.minCoeff();
  const double shifted = (-beta * (energies.array() - eMin)).exp().sum();
  return -beta * eMin + std::log(shifted);
}

DensityMatrix coherentGibbsState(const Hamiltonian& h, double beta) {
  requireThermalBeta(beta, "coherentGibbsState");
  if (h.isDegenerate()) {
    throw DegenerateSpectrumError(
        "coherentGibbsState: spectrum has a degenerate level, so the state is "
        "not uniquely determined by the Hamiltonian");
  }
  const RealVector& energies = h.spectrum().eigenvalues;
  const double eMin = energies.minCoeff();
  RealVector weights = (-beta * (energies.array() - eMin)).exp().matrix();
  weights /= weights.sum();
  ComplexVector psi = h.spectrum().eigenvectors * weights.cwiseSqrt().cast<Complex>();
  return DensityMatrix::pure(psi);
}

RealVector populations(const DensityMatrix& rho, const Hamiltonian& h) {
  if (rho.dim() != h.dim()) {
    throw DimensionMismatchError("populations: state and Hamiltonian dimensions differ");
  }
  const SpectralDecomposition& s = h.spectrum();
  RealVector out(static_cast<Index>(s.blocks.size()));
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    const BlockRange& range = s.blocks[b];
    const ComplexMatrix basis = s.eigenvectors.middleCols(range.begin, range.size());
    out[static_cast<Index>(b)] = (basis.adjoint() * rho.matrix() * basis).trace().real();
  }
  return out;
}

double vonNeumannEntropy(const DensityMatrix& rho) {
  double entropy = 0.0;
  for (Index i = 0; i < rho.dim(); ++i) {
    const double p = rho.probabilities()[i];
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return entropy;
}

double relativeEntropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatchError("relativeEntropy: state dimensions differ");
  }
  const SpectralDecomposition& s = sigma.spectrum();
  double crossTerm = 0.0;       // Tr(rho ln sigma) over the support of sigma.
  double outsideWeight = 0.0;   // rho-weight on the kernel of sigma.
  for (Index i = 0; i < sigma.dim(); ++i) {
    const ComplexVector v = s.eigenvectors.col(i);
    const double weight = std::max(0.0, (v.adjoint() * rho.matrix() * v).value().real());
    if (s.eigenvalues[i] <= kEigenvalueClamp) {
      outsideWeight += weight;
    } else {
      crossTerm += weight * std::log(s.eigenvalues[i]);
    }
  }
  if (outsideWeight > kTraceTol) {
    return std::numeric_limits<double>::infinity();
  }
  return -vonNeumannEntropy(rho) - crossTerm;
}

}  // namespace thermalops
