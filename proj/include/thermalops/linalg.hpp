#pragma once

// Dense complex linear algebra primitives shared by all modules: Hermitian
// eigendecomposition with degeneracy blocking, tensor products, partial
// traces and spectral matrix functions.

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

#include "thermalops/errors.hpp"

namespace thermalops {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Tolerances used across the library. All absolute.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kDegeneracyTol = 1e-9;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-9;
// Eigenvalues within this band of zero are treated as exactly zero
// (0 ln 0 = 0); more negative values on a density matrix are an error.
inline constexpr double kEigenvalueClamp = 1e-12;
inline constexpr Index kMaxCompositeDim = 4096;

// Half-open index range [begin, end) of one degenerate eigenvalue group.
struct BlockRange {
  Index begin = 0;
  Index end = 0;
  Index size() const { return end - begin; }
};

// Result of eigh. Eigenvalues ascending, eigenvector columns matching.
// blocks groups eigenvalues equal within the degeneracy tolerance
// (single-linkage chaining on the sorted values).
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
  std::vector<BlockRange> blocks;

  Index dim() const { return eigenvalues.size(); }
  // Block index for each eigenvalue index.
  std::vector<Index> blockOf() const;
};

double maxAbs(const ComplexMatrix& m);
bool isHermitian(const ComplexMatrix& m, double tol = kHermitianTol);
// (m + m^dagger)/2, used to strip rounding asymmetry from products that
// are Hermitian in exact arithmetic.
ComplexMatrix hermitize(const ComplexMatrix& m);
// Throws DomainError on non-square or non-finite input.
void requireSquareFinite(const ComplexMatrix& m, const char* what);

SpectralDecomposition eigh(const ComplexMatrix& m,
                           double degeneracyTol = kDegeneracyTol);

// Kronecker product with system-major index pairing: entry
// ((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2), row (i1*dim(b) + i2).
ComplexMatrix tensorProduct(const ComplexMatrix& a, const ComplexMatrix& b,
                            Index maxDim = kMaxCompositeDim);

enum class Subsystem { System, Bath };

// Trace out the complement of `keep` from a (dimSystem*dimBath)-dimensional
// operator under the system-major convention.
ComplexMatrix partialTrace(const ComplexMatrix& m, Index dimSystem,
                           Index dimBath, Subsystem keep);

// V f(diag lambda) V^dagger for Hermitian m and real scalar f. Eigenvalues
// within kEigenvalueClamp of zero are clamped to zero before f is applied;
// a non-finite f value raises DomainError.
ComplexMatrix matrixFunction(const ComplexMatrix& m,
                             const std::function<double(double)>& f);

// Same spectral construction with a complex-valued map, e.g. E -> e^{-iEt}.
// No clamping; the result is not Hermitian in general.
ComplexMatrix spectralMap(const SpectralDecomposition& s,
                          const std::function<Complex(double)>& f);

}  // namespace thermalops
