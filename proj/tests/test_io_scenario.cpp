#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "thermalops/matrix_io.hpp"
#include "thermalops/scenario.hpp"

using namespace thermalops;

namespace {

ScenarioConfig parseString(const std::string& text) {
  std::istringstream in(text);
  return parseConfig(in);
}

const std::string kSwapDoc =
    "# resonant qubits under a quarter swap\n"
    "dS = 2\n"
    "dB = 2\n"
    "spectrumS = 0 1\n"
    "spectrumB = 0 1\n"
    "beta = 1.0\n"
    "input = pure 1,0 1,0\n"
    "operation = partial-swap 0.7853981633974483\n";

const CheckResult& findCheck(const RunRecord& record, const std::string& name) {
  for (const CheckResult& check : record.checks) {
    if (check.name == name) return check;
  }
  REQUIRE_MESSAGE(false, "check not found: ", name);
  static CheckResult dummy;
  return dummy;
}

}  // namespace

TEST_CASE("matrix round trip reproduces every double bit for bit") {
  ComplexMatrix m = testHermitian(3, 5);
  m.conservativeResize(3, 4);
  m.col(3) << Complex(1e-300, -1e300), Complex(0.1, -0.2), Complex(3.5e-12, 7.0);

  std::stringstream buffer;
  writeMatrix(buffer, m);
  const ComplexMatrix back = readMatrix(buffer);

  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 4);
  CHECK((back.array() == m.array()).all());  // exact equality, not approximate
}

TEST_CASE("named matrix blocks round trip with their labels") {
  NamedMatrices blocks;
  blocks.emplace_back("alpha", testState(2, 8));
  blocks.emplace_back("beta_matrix", testState(3, 9));

  std::stringstream buffer;
  writeNamedMatrices(buffer, blocks);
  const NamedMatrices back = readNamedMatrices(buffer);

  REQUIRE(back.size() == 2);
  CHECK(back[0].first == "alpha");
  CHECK(back[1].first == "beta_matrix");
  CHECK((back[0].second.array() == blocks[0].second.array()).all());
  CHECK((back[1].second.array() == blocks[1].second.array()).all());
}

TEST_CASE("readMatrix rejects malformed documents") {
  std::istringstream truncated("2 2\n1,0 0,0\n");
  CHECK_THROWS_AS(readMatrix(truncated), DomainError);

  std::istringstream garbage("2 2\n1,0 0,0\n1,0 nonsense\n");
  CHECK_THROWS_AS(readMatrix(garbage), DomainError);
}

TEST_CASE("emitted state blocks match the golden interchange file") {
  const ProcessOutcome out = buildOutcome(parseString(kSwapDoc));
  NamedMatrices blocks;
  blocks.emplace_back("rho_prime_sb", out.rhoPrimeSB.matrix());
  blocks.emplace_back("rho_prime_s", out.rhoPrimeS.matrix());
  blocks.emplace_back("rho_prime_b", out.rhoPrimeB.matrix());
  std::stringstream produced;
  writeNamedMatrices(produced, blocks);

  std::ifstream golden(std::string(TESTS_SOURCE_DIR) + "/golden/emit_qubit_swap.txt",
                       std::ios::binary);
  REQUIRE(golden.good());
  std::stringstream expected;
  expected << golden.rdbuf();
  CHECK(produced.str() == expected.str());
}

TEST_CASE("parseConfig reads a complete scenario document") {
  const ScenarioConfig cfg = parseString(
      "dS = 2\n"
      "dB = 3\n"
      "spectrumS = 0 1\n"
      "spectrumB = 0 1 2\n"
      "beta = 0.5\n"
      "input = diagonal 0.25 0.75\n"
      "operation = random-to 42\n"
      "convention = rank-one\n"
      "tolerance = 1e-8\n");

  CHECK(cfg.dS == 2);
  CHECK(cfg.dB == 3);
  CHECK(cfg.spectrumB[2] == 2.0);
  CHECK(cfg.beta == 0.5);
  CHECK(cfg.input == InputStateKind::Diagonal);
  CHECK(cfg.diagonalProbabilities[1] == 0.75);
  CHECK(cfg.operation == OperationKind::RandomTO);
  CHECK(cfg.operationSeed == 42);
  CHECK(cfg.convention == DephasingConvention::RankOneEigenbasis);
  CHECK(cfg.tolerance == 1e-8);
}

TEST_CASE("parseConfig rejects malformed documents") {
  // unknown key
  CHECK_THROWS_AS(parseString(kSwapDoc + "volume = 3\n"), ConfigError);
  // missing required dimensions
  CHECK_THROWS_AS(parseString("dS = 2\nspectrumS = 0 1\n"), ConfigError);
  // spectrum length disagrees with the dimension
  CHECK_THROWS_AS(parseString("dS = 2\ndB = 2\nspectrumS = 0 1 2\nspectrumB = 0 1\n"),
                  ConfigError);
  // beta must be strictly positive for a scenario
  CHECK_THROWS_AS(parseString(
                      "dS = 2\ndB = 2\nspectrumS = 0 1\nspectrumB = 0 1\nbeta = 0\n"),
                  ConfigError);
  // diagonal probabilities must be normalized
  CHECK_THROWS_AS(
      parseString("dS = 2\ndB = 2\nspectrumS = 0 1\nspectrumB = 0 1\n"
                  "input = diagonal 0.5 0.6\n"),
      ConfigError);
  // partial swap needs its angle
  CHECK_THROWS_AS(
      parseString("dS = 2\ndB = 2\nspectrumS = 0 1\nspectrumB = 0 1\n"
                  "operation = partial-swap\n"),
      ConfigError);
  // unknown operation family
  CHECK_THROWS_AS(
      parseString("dS = 2\ndB = 2\nspectrumS = 0 1\nspectrumB = 0 1\n"
                  "operation = teleport\n"),
      ConfigError);
  // numeric garbage
  CHECK_THROWS_AS(
      parseString("dS = 2\ndB = 2\nspectrumS = 0 one\nspectrumB = 0 1\n"),
      ConfigError);
  // spectra must be finite
  CHECK_THROWS_AS(
      parseString("dS = 2\ndB = 2\nspectrumS = 0 inf\nspectrumB = 0 1\n"),
      ConfigError);
}

TEST_CASE("buildOutcome honors the input family and its seed") {
  ScenarioConfig cfg = parseString(kSwapDoc);
  cfg.input = InputStateKind::RandomMixed;
  cfg.inputSeed = 77;
  const ProcessOutcome a = buildOutcome(cfg);
  const ProcessOutcome b = buildOutcome(cfg);
  CHECK(maxAbs(a.rhoInS.matrix() - b.rhoInS.matrix()) == 0.0);

  cfg.input = InputStateKind::CoherentGibbs;
  const ProcessOutcome c = buildOutcome(cfg);
  const DensityMatrix expected =
      coherentGibbsState(c.setup.systemHamiltonian(), c.setup.beta());
  CHECK(maxAbs(c.rhoInS.matrix() - expected.matrix()) <= 1e-14);
}

TEST_CASE("runScenario: identity operation leaves every account at zero") {
  ScenarioConfig cfg = parseString(kSwapDoc);
  cfg.operation = OperationKind::Identity;
  const RunRecord record = runScenario(cfg);

  CHECK(record.pass);
  CHECK(std::abs(record.report.dES) <= 1e-12);
  CHECK(std::abs(record.report.heatStandard) <= 1e-12);
  CHECK(std::abs(record.report.heatNew) <= 1e-12);
  CHECK(std::abs(record.report.sirrStandard) <= 1e-12);
  CHECK(std::abs(record.report.sirrNew) <= 1e-12);
}

TEST_CASE("runScenario: Gibbs input is a fixed point with zero production") {
  const RunRecord record = runScenario(parseString(
      "dS = 2\ndB = 2\nspectrumS = 0 1\nspectrumB = 0 1\n"
      "input = gibbs\noperation = random-to 4\n"));
  CHECK(record.pass);
  CHECK(std::abs(record.report.sirrStandard) <= 1e-10);
  CHECK(std::abs(record.report.sirrNew) <= 1e-10);
  CHECK(findCheck(record, "gibbs_fixed_point").applicable);
  CHECK(findCheck(record, "gibbs_fixed_point").pass);
}

TEST_CASE("scenario checks gate on the operation family") {
  ScenarioConfig cfg = parseString(kSwapDoc);
  cfg.operation = OperationKind::GeneralUnitary;
  cfg.operationSeed = 5;
  const RunRecord record = runScenario(cfg);

  // Identities that lean on energy conservation make no claim here...
  CHECK_FALSE(findCheck(record, "energy_conservation").applicable);
  CHECK_FALSE(findCheck(record, "ep_std_def_vs_free_energy").applicable);
  CHECK_FALSE(findCheck(record, "covariance").applicable);
  CHECK_FALSE(findCheck(record, "gibbs_fixed_point").applicable);
  // ...while the definitional ones still must hold.
  CHECK(findCheck(record, "heat_bridge").applicable);
  CHECK(findCheck(record, "heat_bridge").pass);
  CHECK(findCheck(record, "unitary_total_entropy").applicable);
  CHECK(record.pass);
}

TEST_CASE("rank-one convention records advisory coherence checks") {
  ScenarioConfig cfg = parseString(kSwapDoc);
  cfg.input = InputStateKind::Pure;
  ComplexVector plus(2);
  plus << 1.0, 1.0;
  cfg.pureAmplitudes = plus;
  cfg.operation = OperationKind::RandomTO;
  cfg.operationSeed = 3;
  cfg.convention = DephasingConvention::RankOneEigenbasis;
  const RunRecord record = runScenario(cfg);

  const CheckResult& quantum = findCheck(record, "quantum_new_vs_correlated_coherence");
  CHECK(quantum.advisory);
  // Advisory misses must not fail the record.
  CHECK(record.pass);
}

TEST_CASE("runSweep: the swap angle brackets dissipation between two zeros") {
  const ScenarioConfig base = parseString(kSwapDoc);
  const std::vector<RunRecord> records =
      runSweep(base, "theta", {0.0, 0.7853981633974483, 1.5707963267948966});

  REQUIRE(records.size() == 3);
  CHECK(std::abs(records[0].report.sirrNew) <= 1e-10);
  CHECK(records[1].report.sirrNew > 0.1);
  CHECK(std::abs(records[2].report.sirrNew) <= 1e-10);
  for (const RunRecord& r : records) CHECK(r.pass);
}

TEST_CASE("runSweep: dB rebuilds a resonant bath ladder") {
  ScenarioConfig base = parseString(kSwapDoc);
  base.operation = OperationKind::RandomTO;
  base.operationSeed = 2;
  const std::vector<RunRecord> records = runSweep(base, "dB", {2.0, 3.0, 4.0});

  REQUIRE(records.size() == 3);
  for (std::size_t k = 0; k < records.size(); ++k) {
    const RealVector& spectrum = records[k].config.spectrumB;
    REQUIRE(spectrum.size() == static_cast<Index>(k + 2));
    for (Index i = 0; i < spectrum.size(); ++i) {
      CHECK(spectrum[i] == doctest::Approx(static_cast<double>(i)).epsilon(1e-14));
    }
    CHECK(records[k].pass);
  }
}

TEST_CASE("runSweep rejects unknown or ill-typed parameters") {
  const ScenarioConfig base = parseString(kSwapDoc);
  CHECK_THROWS_AS(runSweep(base, "gamma", {1.0}), UnknownParameterError);
  // seed values must be integers
  ScenarioConfig randomized = base;
  randomized.operation = OperationKind::RandomTO;
  CHECK_THROWS_AS(runSweep(randomized, "seed", {1.5}), ConfigError);
  // a theta sweep only makes sense for the partial swap
  ScenarioConfig identity = base;
  identity.operation = OperationKind::Identity;
  CHECK_THROWS_AS(runSweep(identity, "theta", {0.1}), ConfigError);
}

TEST_CASE("the two contrast cases at the quarter swap match the dense reference") {
  // Diagonal input: all dissipation is classical. Coherent Gibbs input: all
  // dissipation is quantum. Both runs are compared field by field against
  // the brute-force reference implementation.
  const std::string common =
      "dS = 2\ndB = 2\nspectrumS = 0 1\nspectrumB = 0 1\nbeta = 1\n"
      "operation = partial-swap 0.7853981633974483\n";

  const RunRecord diagonal =
      runScenario(parseString(common + "input = diagonal 0.8 0.2\n"));
  CHECK(diagonal.pass);
  CHECK(std::abs(diagonal.report.quantumNew) <= 1e-9);
  CHECK(diagonal.report.sirrNew ==
        doctest::Approx(diagonal.report.classicalNew).epsilon(1e-9));

  const RunRecord coherent = runScenario(parseString(common + "input = coherent-gibbs\n"));
  CHECK(coherent.pass);
  CHECK(std::abs(coherent.report.classicalNew) <= 1e-9);
  CHECK(coherent.report.sirrNew ==
        doctest::Approx(coherent.report.quantumNew).epsilon(1e-9));

  const BipartiteSetup setup(Hamiltonian::fromSpectrum(RealVector::LinSpaced(2, 0, 1)),
                             Hamiltonian::fromSpectrum(RealVector::LinSpaced(2, 0, 1)),
                             1.0);
  const ComplexMatrix u = partialSwapUnitary(setup, 0.7853981633974483).unitary();
  const oracle::Vec energies = {0.0, 1.0};
  for (const RunRecord* record : {&diagonal, &coherent}) {
    const ProcessOutcome out = buildOutcome(record->config);
    const oracle::Report ref = oracle::computeReport(
        energies, energies, 1.0, toOracle(out.rhoInS.matrix()),
        toOracle(out.rhoInB.matrix()), toOracle(u));
    CHECK(std::abs(record->report.sirrStandard - ref.sirrStandard) <= 1e-9);
    CHECK(std::abs(record->report.sirrNew - ref.sirrNew) <= 1e-9);
    CHECK(std::abs(record->report.classicalNew - ref.classicalNew) <= 1e-9);
    CHECK(std::abs(record->report.quantumNew - ref.quantumNew) <= 1e-9);
    CHECK(std::abs(record->report.heatStandard - ref.heatStandard) <= 1e-9);
    CHECK(std::abs(record->report.heatNew - ref.heatNew) <= 1e-9);
  }
}

TEST_CASE("verifyAll covers the whole matrix and stays within tolerance") {
  const VerifySummary summary = verifyAll(1e-9);
  CHECK(summary.scenarioCount == 204);
  CHECK(summary.failedCount == 0);
  CHECK(summary.pass);
  for (const auto& [name, worst] : summary.worstPerCheck) {
    INFO("check ", name);
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("verifyAll with no dimension pairs runs nothing and passes") {
  const VerifySummary summary = verifyAll(1e-9, {});
  CHECK(summary.scenarioCount == 0);
  CHECK(summary.pass);
}

TEST_CASE("verifyAll below the floating-point noise floor reports failures") {
  const VerifySummary summary = verifyAll(1e-15);
  CHECK(summary.scenarioCount == 204);
  CHECK_FALSE(summary.pass);
  CHECK(summary.failedCount > 0);
}

TEST_CASE("CSV output is deterministic, schema-tagged, and LF-only") {
  const std::vector<RunRecord> records = {runScenario(parseString(kSwapDoc))};

  std::stringstream first, second;
  writeCsv(first, records, false);
  writeCsv(second, records, false);
  CHECK(first.str() == second.str());
  CHECK(first.str().find('\r') == std::string::npos);
  CHECK(first.str().rfind("schema_version,", 0) == 0);

  std::stringstream stamped;
  writeCsv(stamped, records, true);
  CHECK(stamped.str().rfind("# generated ", 0) == 0);
}

TEST_CASE("CSV cells: empty for non-applicable checks, full precision numbers") {
  ScenarioConfig cfg = parseString(kSwapDoc);
  cfg.operation = OperationKind::GeneralUnitary;
  cfg.operationSeed = 6;
  const RunRecord record = runScenario(cfg);

  const std::vector<std::string> header = csvHeader();
  std::vector<std::string> cells;
  {
    const std::string row = csvRow(record);
    std::string cell;
    std::istringstream stream(row);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
  }
  REQUIRE(cells.size() == header.size());

  auto columnOf = [&header](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    REQUIRE_MESSAGE(false, "column not found: ", name);
    return std::size_t{0};
  };

  CHECK(cells[columnOf("schema_version")] == kCsvSchemaVersion);
  CHECK(cells[columnOf("chk_energy_conservation")].empty());
  CHECK(!cells[columnOf("chk_heat_bridge")].empty());

  // 17 significant digits: the printed value parses back to the exact double.
  const std::string desCell = cells[columnOf("des")];
  CHECK(std::strtod(desCell.c_str(), nullptr) == record.report.dES);
}
