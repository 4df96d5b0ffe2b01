#include "thermalops/linalg.hpp"

#include <cmath>
#include <string>

namespace thermalops {

std::vector<Index> SpectralDecomposition::blockOf() const {
  std::vector<Index> owner(static_cast<std::size_t>(dim()), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Index i = blocks[b].begin; i < blocks[b].end; ++i) {
      owner[static_cast<std::size_t>(i)] = static_cast<Index>(b);
    }
  }
  return owner;
}

double maxAbs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool isHermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return maxAbs(m - m.adjoint()) <= tol;
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

void requireSquareFinite(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DomainError(std::string(what) + ": matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw DomainError(std::string(what) + ": matrix has non-finite entries");
  }
}

SpectralDecomposition eigh(const ComplexMatrix& m, double degeneracyTol) {
  requireSquareFinite(m, "eigh");
  if (!isHermitian(m)) {
    throw NotHermitianError("eigh: input deviates from Hermiticity by more than " +
                            std::to_string(kHermitianTol));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m));
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eigh: eigensolver did not converge");
  }

  SpectralDecomposition out;
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();

  // Degeneracy grouping by single-linkage chaining on the sorted values.
  const Index n = out.eigenvalues.size();
  Index start = 0;
  for (Index i = 1; i <= n; ++i) {
    if (i == n || out.eigenvalues[i] - out.eigenvalues[i - 1] > degeneracyTol) {
      out.blocks.push_back({start, i});
      start = i;
    }
  }
  return out;
}

ComplexMatrix tensorProduct(const ComplexMatrix& a, const ComplexMatrix& b,
                            Index maxDim) {
  requireSquareFinite(a, "tensorProduct");
  requireSquareFinite(b, "tensorProduct");
  const Index da = a.rows();
  const Index db = b.rows();
  if (da * db > maxDim) {
    throw DimensionOverflowError("tensorProduct: product dimension " +
                                 std::to_string(da * db) + " exceeds maximum " +
                                 std::to_string(maxDim));
  }
  ComplexMatrix out(da * db, da * db);
  for (Index i1 = 0; i1 < da; ++i1) {
    for (Index j1 = 0; j1 < da; ++j1) {
      out.block(i1 * db, j1 * db, db, db) = a(i1, j1) * b;
    }
  }
  return out;
}

ComplexMatrix partialTrace(const ComplexMatrix& m, Index dimSystem,
                           Index dimBath, Subsystem keep) {
  requireSquareFinite(m, "partialTrace");
  if (m.rows() != dimSystem * dimBath) {
    throw DimensionMismatchError(
        "partialTrace: matrix dimension " + std::to_string(m.rows()) +
        " is not dS*dB = " + std::to_string(dimSystem * dimBath));
  }
  if (keep == Subsystem::System) {
    ComplexMatrix out = ComplexMatrix::Zero(dimSystem, dimSystem);
    for (Index i = 0; i < dimSystem; ++i) {
      for (Index j = 0; j < dimSystem; ++j) {
        for (Index b = 0; b < dimBath; ++b) {
          out(i, j) += m(i * dimBath + b, j * dimBath + b);
        }
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dimBath, dimBath);
  for (Index a = 0; a < dimBath; ++a) {
    for (Index b = 0; b < dimBath; ++b) {
      for (Index s = 0; s < dimSystem; ++s) {
        out(a, b) += m(s * dimBath + a, s * dimBath + b);
      }
    }
  }
  return out;
}

ComplexMatrix matrixFunction(const ComplexMatrix& m,
                             const std::function<double(double)>& f) {
  SpectralDecomposition s = eigh(m);
  RealVector mapped(s.dim());
  for (Index i = 0; i < s.dim(); ++i) {
    double lambda = s.eigenvalues[i];
    if (std::abs(lambda) <= kEigenvalueClamp) lambda = 0.0;
    const double value = f(lambda);
    if (!std::isfinite(value)) {
      throw DomainError("matrixFunction: f(" + std::to_string(lambda) +
                        ") is not finite");
    }
    mapped[i] = value;
  }
  ComplexMatrix out = s.eigenvectors * mapped.asDiagonal() *
                      s.eigenvectors.adjoint();
  return hermitize(out);
}

ComplexMatrix spectralMap(const SpectralDecomposition& s,
                          const std::function<Complex(double)>& f) {
  ComplexVector mapped(s.dim());
  for (Index i = 0; i < s.dim(); ++i) mapped[i] = f(s.eigenvalues[i]);
  return s.eigenvectors * mapped.asDiagonal() * s.eigenvectors.adjoint();
}

}  // namespace thermalops
