#include "thermalops/report.hpp"

namespace thermalops {

ProcessReport buildProcessReport(const ProcessOutcome& outcome,
                                 DephasingConvention conv) {
  const BipartiteSetup& setup = outcome.setup;
  const Hamiltonian& hS = setup.systemHamiltonian();
  const Hamiltonian& hB = setup.bathHamiltonian();
  const double beta = setup.beta();

  ProcessReport report{};
  report.dES = averageEnergy(outcome.rhoPrimeS, hS) - averageEnergy(outcome.rhoInS, hS);
  report.dEB = averageEnergy(outcome.rhoPrimeB, hB) - averageEnergy(outcome.rhoInB, hB);
  report.dSS = vonNeumannEntropy(outcome.rhoPrimeS) - vonNeumannEntropy(outcome.rhoInS);
  report.dSB = vonNeumannEntropy(outcome.rhoPrimeB) - vonNeumannEntropy(outcome.rhoInB);
  report.dFS = freeEnergy(outcome.rhoPrimeS, hS, beta) - freeEnergy(outcome.rhoInS, hS, beta);
  report.dFB = freeEnergy(outcome.rhoPrimeB, hB, beta) - freeEnergy(outcome.rhoInB, hB, beta);
  report.heatStandard = heatStandard(outcome);
  report.heatNew = heatNew(outcome);
  report.sirrStandard = entropyProductionStandard(outcome).value;
  report.sirrNew = entropyProductionNew(outcome).value;
  report.mutualInfo = mutualInformation(outcome.rhoPrimeSB, setup.dimSystem(), setup.dimBath());
  report.relEntBathToGibbs = relativeEntropy(outcome.rhoPrimeB, setup.bathGibbs());

  const CoherenceReport coherence = buildCoherenceReport(outcome, conv);
  report.classicalStandard = coherence.classicalStandard;
  report.quantumStandard = coherence.quantumStandard;
  report.classicalNew = coherence.classicalNew;
  report.quantumNew = coherence.quantumNew;
  report.correlatedCoherence = coherence.correlatedCoherence;
  return report;
}

}  // namespace thermalops
