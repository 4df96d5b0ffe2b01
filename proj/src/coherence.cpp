#include "thermalops/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thermalops/accounting.hpp"

namespace thermalops {

namespace {

constexpr double kIdentityTol = 1e-9;

void requireStrictlyPositiveBeta(double beta, const char* what) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw BetaZeroError(std::string(what) +
                        ": requires a strictly positive, finite inverse temperature");
  }
}

}  // namespace

DensityMatrix dephase(const DensityMatrix& rho, const Hamiltonian& h,
                      DephasingConvention conv) {
  if (rho.dim() != h.dim()) {
    throw DimensionMismatchError("dephase: state and Hamiltonian dimensions differ");
  }
  const SpectralDecomposition& s = h.spectrum();
  ComplexMatrix a = s.eigenvectors.adjoint() * rho.matrix() * s.eigenvectors;
  if (conv == DephasingConvention::RankOneEigenbasis) {
    const ComplexVector kept = a.diagonal();
    a = kept.asDiagonal();
  } else {
    const std::vector<Index> owner = s.blockOf();
    for (Index i = 0; i < a.rows(); ++i) {
      for (Index j = 0; j < a.cols(); ++j) {
        if (owner[static_cast<std::size_t>(i)] != owner[static_cast<std::size_t>(j)]) {
          a(i, j) = 0.0;
        }
      }
    }
  }
  return DensityMatrix(hermitize(s.eigenvectors * a * s.eigenvectors.adjoint()));
}

double relEntCoherence(const DensityMatrix& rho, const Hamiltonian& h,
                       DephasingConvention conv) {
  return vonNeumannEntropy(dephase(rho, h, conv)) - vonNeumannEntropy(rho);
}

double classicalDivergence(const DensityMatrix& rho, const Hamiltonian& h,
                           const DensityMatrix& gibbs, DephasingConvention conv) {
  return relativeEntropy(dephase(rho, h, conv), gibbs);
}

FreeEnergyDecomposition freeEnergyDecomposition(const DensityMatrix& rho,
                                                const Hamiltonian& h, double beta,
                                                DephasingConvention conv) {
  requireStrictlyPositiveBeta(beta, "freeEnergyDecomposition");
  const double temperature = 1.0 / beta;
  FreeEnergyDecomposition split{};
  split.equilibrium = -logPartition(h, beta) / beta;
  split.classical = temperature * classicalDivergence(rho, h, gibbsState(h, beta), conv);
  split.coherent = temperature * relEntCoherence(rho, h, conv);
  return split;
}

double correlatedCoherence(const DensityMatrix& rhoSB, const BipartiteSetup& setup,
                           DephasingConvention conv) {
  if (rhoSB.dim() != setup.dimTotal()) {
    throw DimensionMismatchError("correlatedCoherence: state dimension is not dS*dB");
  }
  const DensityMatrix marginalS(hermitize(partialTrace(
      rhoSB.matrix(), setup.dimSystem(), setup.dimBath(), Subsystem::System)));
  const DensityMatrix marginalB(hermitize(partialTrace(
      rhoSB.matrix(), setup.dimSystem(), setup.dimBath(), Subsystem::Bath)));
  return relEntCoherence(rhoSB, setup.totalHamiltonian(), conv) -
         relEntCoherence(marginalS, setup.systemHamiltonian(), conv) -
         relEntCoherence(marginalB, setup.bathHamiltonian(), conv);
}

StandardEntropySplit entropyProductionSplitStandard(const ProcessOutcome& outcome,
                                                    DephasingConvention conv) {
  const BipartiteSetup& setup = outcome.setup;
  requireStrictlyPositiveBeta(setup.beta(), "entropyProductionSplitStandard");
  const Hamiltonian& hS = setup.systemHamiltonian();
  const DensityMatrix& gammaS = setup.systemGibbs();

  StandardEntropySplit split{};
  split.classical = classicalDivergence(outcome.rhoInS, hS, gammaS, conv) -
                    classicalDivergence(outcome.rhoPrimeS, hS, gammaS, conv);
  split.quantum = relEntCoherence(outcome.rhoInS, hS, conv) -
                  relEntCoherence(outcome.rhoPrimeS, hS, conv);
  return split;
}

NewEntropySplit entropyProductionSplitNew(const ProcessOutcome& outcome,
                                          DephasingConvention conv) {
  const BipartiteSetup& setup = outcome.setup;
  requireStrictlyPositiveBeta(setup.beta(), "entropyProductionSplitNew");
  const Hamiltonian& hS = setup.systemHamiltonian();
  const Hamiltonian& hB = setup.bathHamiltonian();
  const DensityMatrix& gammaS = setup.systemGibbs();
  const DensityMatrix& gammaB = setup.bathGibbs();

  NewEntropySplit split{};
  split.classical = classicalDivergence(outcome.rhoInS, hS, gammaS, conv) -
                    classicalDivergence(outcome.rhoPrimeS, hS, gammaS, conv) -
                    classicalDivergence(outcome.rhoPrimeB, hB, gammaB, conv);
  split.quantum = relEntCoherence(outcome.rhoInS, hS, conv) -
                  relEntCoherence(outcome.rhoPrimeS, hS, conv) -
                  relEntCoherence(outcome.rhoPrimeB, hB, conv);
  split.correlatedCoherence = correlatedCoherence(outcome.rhoPrimeSB, setup, conv);

  const DensityMatrix dephasedJoint =
      dephase(outcome.rhoPrimeSB, setup.totalHamiltonian(), conv);
  split.dephasedMutualInformation =
      mutualInformation(dephasedJoint, setup.dimSystem(), setup.dimBath());
  const double jointMutual =
      mutualInformation(outcome.rhoPrimeSB, setup.dimSystem(), setup.dimBath());
  const double quantumFromMutual = jointMutual - split.dephasedMutualInformation;

  split.maxIdentityDeviation =
      std::max({std::abs(split.classical - split.dephasedMutualInformation),
                std::abs(split.quantum - quantumFromMutual),
                std::abs(split.quantum - split.correlatedCoherence)});
  split.conventionConsistent = split.maxIdentityDeviation <= kIdentityTol;
  return split;
}

double checkCoherencePreservation(const ThermalOperation& op, const DensityMatrix& rhoS,
                                  DephasingConvention conv) {
  const ProcessOutcome outcome = applyTO(op, rhoS);
  const double before = relEntCoherence(rhoS, op.setup().systemHamiltonian(), conv);
  const double after =
      relEntCoherence(outcome.rhoPrimeSB, op.setup().totalHamiltonian(), conv);
  return std::abs(after - before);
}

CoherenceReport buildCoherenceReport(const ProcessOutcome& outcome,
                                     DephasingConvention conv) {
  const BipartiteSetup& setup = outcome.setup;
  CoherenceReport report{};
  report.cS = relEntCoherence(outcome.rhoInS, setup.systemHamiltonian(), conv);
  report.cSPrime = relEntCoherence(outcome.rhoPrimeS, setup.systemHamiltonian(), conv);
  report.cBPrime = relEntCoherence(outcome.rhoPrimeB, setup.bathHamiltonian(), conv);
  report.cSBPrime = relEntCoherence(outcome.rhoPrimeSB, setup.totalHamiltonian(), conv);
  report.correlatedCoherence = report.cSBPrime - report.cSPrime - report.cBPrime;

  const StandardEntropySplit standard = entropyProductionSplitStandard(outcome, conv);
  report.classicalStandard = standard.classical;
  report.quantumStandard = standard.quantum;
  const NewEntropySplit entropic = entropyProductionSplitNew(outcome, conv);
  report.classicalNew = entropic.classical;
  report.quantumNew = entropic.quantum;
  return report;
}

}  // namespace thermalops
