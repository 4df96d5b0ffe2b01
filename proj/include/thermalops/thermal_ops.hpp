#pragma once

#include <cstdint>

#include "thermalops/states.hpp"

namespace thermalops {

// System + bath arrangement: local Hamiltonians, the bath inverse
// temperature, and the derived total Hamiltonian H_S (x) I + I (x) H_B in
// system-major ordering (composite row index = iS * dB + iB). The local Gibbs
// states are cached because nearly every functional needs them.
class BipartiteSetup {
 public:
  BipartiteSetup(Hamiltonian systemH, Hamiltonian bathH, double beta);

  const Hamiltonian& systemHamiltonian() const { return systemH_; }
  const Hamiltonian& bathHamiltonian() const { return bathH_; }
  const Hamiltonian& totalHamiltonian() const { return totalH_; }
  double beta() const { return beta_; }
  Index dimSystem() const { return systemH_.dim(); }
  Index dimBath() const { return bathH_.dim(); }
  Index dimTotal() const { return totalH_.dim(); }
  const DensityMatrix& systemGibbs() const { return systemGibbs_; }
  const DensityMatrix& bathGibbs() const { return bathGibbs_; }

 private:
  Hamiltonian systemH_;
  Hamiltonian bathH_;
  Hamiltonian totalH_;
  double beta_;
  DensityMatrix systemGibbs_;
  DensityMatrix bathGibbs_;
};

// Energy-preserving global unitary. Construction validates unitarity and
// commutation with the total Hamiltonian, both within kUnitaryTol, and keeps
// the measured deviations for reporting.
class ThermalOperation {
 public:
  ThermalOperation(BipartiteSetup setup, ComplexMatrix unitary);

  const BipartiteSetup& setup() const { return setup_; }
  const ComplexMatrix& unitary() const { return unitary_; }
  // Degenerate eigenspaces of the total Hamiltonian; the unitary is block
  // diagonal with respect to this partition.
  const std::vector<BlockRange>& blocks() const {
    return setup_.totalHamiltonian().spectrum().blocks;
  }
  double unitarityDeviation() const { return unitarityDeviation_; }
  double commutatorDeviation() const { return commutatorDeviation_; }

 private:
  BipartiteSetup setup_;
  ComplexMatrix unitary_;
  double unitarityDeviation_;
  double commutatorDeviation_;
};

// Joint output of conjugating a product input, with both marginals. The
// bathIsThermal flag records whether the input bath state was the Gibbs state
// of the setup (true for applyTO); several identities are only claimed then.
struct ProcessOutcome {
  BipartiteSetup setup;
  DensityMatrix rhoInS;
  DensityMatrix rhoInB;
  bool bathIsThermal;
  DensityMatrix rhoPrimeSB;
  DensityMatrix rhoPrimeS;
  DensityMatrix rhoPrimeB;
};

// rho'_SB = u (rhoS (x) gibbs(hB, beta)) u†, plus marginals.
ProcessOutcome applyTO(const ThermalOperation& op, const DensityMatrix& rhoS);

// Same conjugation with an arbitrary unitary and arbitrary bath state; no
// energy-conservation requirement. The unitary itself is still validated.
ProcessOutcome applyGeneralUnitary(const BipartiteSetup& setup,
                                   const ComplexMatrix& u,
                                   const DensityMatrix& rhoS,
                                   const DensityMatrix& rhoB);

// Haar-random unitary on each degenerate eigenspace of the total Hamiltonian,
// assembled in ascending-energy block order; deterministic in the seed.
ThermalOperation randomEnergyPreservingUnitary(const BipartiteSetup& setup,
                                               std::uint64_t seed);

// cos(theta) I - i sin(theta) SWAP_E, where SWAP_E exchanges the system and
// bath energy eigenvectors pairwise. Requires matching sorted spectra
// (resonance) so that the swap conserves energy; theta = 0 is the identity
// and theta = pi/2 the full swap.
ThermalOperation partialSwapUnitary(const BipartiteSetup& setup, double theta);

// The identity unitary as a (trivially valid) thermal operation.
ThermalOperation identityOperation(const BipartiteSetup& setup);

// Haar-random unitary on the full composite space, with no energy
// constraint. Useful as a contrast case for the general-unitary identities.
ComplexMatrix haarUnitary(Index dim, std::uint64_t seed);

// Full-rank random state G G† / Tr(G G†) with G complex Gaussian;
// deterministic in the seed.
DensityMatrix randomMixedState(Index dim, std::uint64_t seed);

struct CovarianceCheck {
  bool pass;
  double deviation;
};

// Compares evolving the input under exp(-i H_S t) before the channel against
// evolving the output after it; returns the max entrywise deviation.
CovarianceCheck checkTimeTranslationCovariance(const ThermalOperation& op,
                                               const DensityMatrix& rhoS,
                                               double time, double tol);

}  // namespace thermalops
