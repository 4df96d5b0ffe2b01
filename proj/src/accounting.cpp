#include "thermalops/accounting.hpp"

#include <cmath>
#include <string>

namespace thermalops {

namespace {

constexpr double kIdentityTol = 1e-9;

void requireStrictlyPositiveBeta(double beta, const char* what) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw BetaZeroError(std::string(what) +
                        ": requires a strictly positive, finite inverse temperature");
  }
}

double finiteRelativeEntropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                             const char* what) {
  const double value = relativeEntropy(rho, sigma);
  if (std::isinf(value)) {
    throw SupportViolationError(std::string(what) +
                                ": relative-entropy term is infinite "
                                "(state has weight outside the reference support)");
  }
  return value;
}

}  // namespace

double averageEnergy(const DensityMatrix& rho, const Hamiltonian& h) {
  if (rho.dim() != h.dim()) {
    throw DimensionMismatchError("averageEnergy: state and Hamiltonian dimensions differ");
  }
  return (h.matrix() * rho.matrix()).trace().real();
}

double freeEnergy(const DensityMatrix& rho, const Hamiltonian& h, double beta) {
  requireStrictlyPositiveBeta(beta, "freeEnergy");
  return averageEnergy(rho, h) - vonNeumannEntropy(rho) / beta;
}

double mutualInformation(const DensityMatrix& rhoSB, Index dimSystem, Index dimBath) {
  if (rhoSB.dim() != dimSystem * dimBath) {
    throw DimensionMismatchError("mutualInformation: state dimension is not dS*dB");
  }
  const DensityMatrix marginalS(hermitize(
      partialTrace(rhoSB.matrix(), dimSystem, dimBath, Subsystem::System)));
  const DensityMatrix marginalB(hermitize(
      partialTrace(rhoSB.matrix(), dimSystem, dimBath, Subsystem::Bath)));
  return vonNeumannEntropy(marginalS) + vonNeumannEntropy(marginalB) -
         vonNeumannEntropy(rhoSB);
}

double heatStandard(const ProcessOutcome& outcome) {
  const Hamiltonian& hB = outcome.setup.bathHamiltonian();
  return -(averageEnergy(outcome.rhoPrimeB, hB) - averageEnergy(outcome.rhoInB, hB));
}

double heatNew(const ProcessOutcome& outcome) {
  requireStrictlyPositiveBeta(outcome.setup.beta(), "heatNew");
  return -(vonNeumannEntropy(outcome.rhoPrimeB) - vonNeumannEntropy(outcome.rhoInB)) /
         outcome.setup.beta();
}

StandardEntropyProduction entropyProductionStandard(const ProcessOutcome& outcome) {
  const BipartiteSetup& setup = outcome.setup;
  requireStrictlyPositiveBeta(setup.beta(), "entropyProductionStandard");

  const double dSS =
      vonNeumannEntropy(outcome.rhoPrimeS) - vonNeumannEntropy(outcome.rhoInS);
  const double value = dSS - setup.beta() * heatStandard(outcome);

  const Hamiltonian& hS = setup.systemHamiltonian();
  const double dFS = freeEnergy(outcome.rhoPrimeS, hS, setup.beta()) -
                     freeEnergy(outcome.rhoInS, hS, setup.beta());

  const double relIn = finiteRelativeEntropy(outcome.rhoInS, setup.systemGibbs(),
                                             "entropyProductionStandard");
  const double relOut = finiteRelativeEntropy(outcome.rhoPrimeS, setup.systemGibbs(),
                                              "entropyProductionStandard");

  const double relBath = finiteRelativeEntropy(outcome.rhoPrimeB, setup.bathGibbs(),
                                               "entropyProductionStandard");
  const double mutual =
      mutualInformation(outcome.rhoPrimeSB, setup.dimSystem(), setup.dimBath());

  return StandardEntropyProduction{value, -setup.beta() * dFS, relIn - relOut,
                                   relBath + mutual};
}

NewEntropyProduction entropyProductionNew(const ProcessOutcome& outcome) {
  const BipartiteSetup& setup = outcome.setup;
  requireStrictlyPositiveBeta(setup.beta(), "entropyProductionNew");

  const double dSS =
      vonNeumannEntropy(outcome.rhoPrimeS) - vonNeumannEntropy(outcome.rhoInS);
  const double value = dSS - setup.beta() * heatNew(outcome);

  const Hamiltonian& hS = setup.systemHamiltonian();
  const Hamiltonian& hB = setup.bathHamiltonian();
  const double dFS = freeEnergy(outcome.rhoPrimeS, hS, setup.beta()) -
                     freeEnergy(outcome.rhoInS, hS, setup.beta());
  const double dFB = freeEnergy(outcome.rhoPrimeB, hB, setup.beta()) -
                     freeEnergy(outcome.rhoInB, hB, setup.beta());

  const double mutual =
      mutualInformation(outcome.rhoPrimeSB, setup.dimSystem(), setup.dimBath());

  return NewEntropyProduction{value, -setup.beta() * (dFS + dFB), mutual};
}

FreeEnergyBounds freeEnergyBounds(const ProcessOutcome& outcome) {
  const BipartiteSetup& setup = outcome.setup;
  requireStrictlyPositiveBeta(setup.beta(), "freeEnergyBounds");

  const Hamiltonian& hS = setup.systemHamiltonian();
  const Hamiltonian& hB = setup.bathHamiltonian();
  const double dFS = freeEnergy(outcome.rhoPrimeS, hS, setup.beta()) -
                     freeEnergy(outcome.rhoInS, hS, setup.beta());
  const double dFB = freeEnergy(outcome.rhoPrimeB, hB, setup.beta()) -
                     freeEnergy(outcome.rhoInB, hB, setup.beta());

  FreeEnergyBounds bounds{};
  bounds.dFS = dFS;
  bounds.boundStandard = 0.0;
  bounds.boundNew = -dFB;
  bounds.tightnessGap = bounds.boundNew - bounds.boundStandard;
  bounds.holdsStandard = dFS <= bounds.boundStandard + kIdentityTol;
  bounds.holdsNew = dFS <= bounds.boundNew + kIdentityTol;
  return bounds;
}

}  // namespace thermalops
