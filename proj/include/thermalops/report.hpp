#pragma once

#include "thermalops/accounting.hpp"
#include "thermalops/coherence.hpp"

namespace thermalops {

// Every scalar of interest for one process, in nats and energy units
// (k_B = 1). This is the row a scenario contributes to a CSV table.
struct ProcessReport {
  double dES;   // system energy change
  double dEB;   // bath energy change
  double dSS;   // system entropy change (nats)
  double dSB;   // bath entropy change (nats)
  double dFS;   // system free-energy change
  double dFB;   // bath free-energy change
  double heatStandard;  // heat as bath energy loss
  double heatNew;       // heat as bath entropy loss over beta
  double sirrStandard;  // entropy production, standard heat
  double sirrNew;       // entropy production, entropic heat
  double mutualInfo;            // I(rho'SB), nats
  double relEntBathToGibbs;     // S(rho'B || gammaB), nats
  double classicalStandard;
  double quantumStandard;
  double classicalNew;
  double quantumNew;
  double correlatedCoherence;
};

ProcessReport buildProcessReport(
    const ProcessOutcome& outcome,
    DephasingConvention conv = DephasingConvention::EigenspaceProjectors);

}  // namespace thermalops
