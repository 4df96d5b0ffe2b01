#pragma once

#include "thermalops/thermal_ops.hpp"

namespace thermalops {

// Tr(h rho), real part (the imaginary part is round-off for valid inputs).
double averageEnergy(const DensityMatrix& rho, const Hamiltonian& h);

// Nonequilibrium free energy F = <E> - S/beta. Rejects beta = 0 (the
// temperature factor is undefined at infinite temperature).
double freeEnergy(const DensityMatrix& rho, const Hamiltonian& h, double beta);

// S(rhoS) + S(rhoB) - S(rhoSB) of a bipartite state in system-major layout.
double mutualInformation(const DensityMatrix& rhoSB, Index dimSystem, Index dimBath);

// Heat as energy lost by the bath: -(Tr(H_B rho'_B) - Tr(H_B rho_B)).
double heatStandard(const ProcessOutcome& outcome);

// Heat as bath entropy change: -(1/beta)(S(rho'_B) - S(rho_B)).
double heatNew(const ProcessOutcome& outcome);

// Entropy production under the standard heat definition, with each
// independently computable form retained as a diagnostic. For a thermal
// operation all four agree; `value` is the defining form dSS - beta*dQbar.
struct StandardEntropyProduction {
  double value;
  double fromFreeEnergy;        // -beta * dF_S
  double fromRelativeEntropies; // S(rhoS||gammaS) - S(rho'S||gammaS)
  double fromBathAndMutualInformation;  // S(rho'B||gammaB) + I(rho'SB)
};
StandardEntropyProduction entropyProductionStandard(const ProcessOutcome& outcome);

// Entropy production under the entropic heat definition. `value` is the
// defining form dSS - beta*dQ; the mutual-information form is exact for any
// unitary on a product input.
struct NewEntropyProduction {
  double value;
  double fromFreeEnergies;       // -beta * (dF_S + dF_B)
  double fromMutualInformation;  // I(rho'SB)
};
NewEntropyProduction entropyProductionNew(const ProcessOutcome& outcome);

// Free-energy change of the system against the two upper bounds: zero, and
// the tighter -dF_B. tightnessGap = -dF_B reports how much the second bound
// improves on the first (nonpositive for thermal operations).
struct FreeEnergyBounds {
  double dFS;
  double boundStandard;  // 0
  double boundNew;       // -dF_B
  double tightnessGap;   // boundNew - boundStandard
  bool holdsStandard;    // dFS <= boundStandard + 1e-9
  bool holdsNew;         // dFS <= boundNew + 1e-9
};
FreeEnergyBounds freeEnergyBounds(const ProcessOutcome& outcome);

}  // namespace thermalops
