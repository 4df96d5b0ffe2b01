// Brute-force reference implementations used to check the library from the
// outside. Everything here is deliberately written against plain
// std::vector matrices with straightforward loops — no Eigen, no shared code
// with the library — so that an agreement between the two is meaningful.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracle {

using Complexd = std::complex<double>;
using Mat = std::vector<std::vector<Complexd>>;
using Vec = std::vector<double>;

inline Mat zeros(std::size_t n, std::size_t m) {
  return Mat(n, std::vector<Complexd>(m, Complexd(0.0, 0.0)));
}

inline Mat identity(std::size_t n) {
  Mat out = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1.0;
  return out;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b[0].size();
  Mat out = zeros(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const Complexd ail = a[i][l];
      for (std::size_t j = 0; j < m; ++j) out[i][j] += ail * b[l][j];
    }
  }
  return out;
}

inline Mat dagger(const Mat& a) {
  const std::size_t n = a.size();
  const std::size_t m = a[0].size();
  Mat out = zeros(m, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) out[j][i] = std::conj(a[i][j]);
  }
  return out;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  Mat out = zeros(na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
        }
      }
    }
  }
  return out;
}

inline Complexd trace(const Mat& a) {
  Complexd t = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

inline double maxAbsDiff(const Mat& a, const Mat& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    }
  }
  return worst;
}

inline Mat conjugate(const Mat& u, const Mat& rho) {
  return multiply(multiply(u, rho), dagger(u));
}

inline Mat partialTraceSystem(const Mat& m, std::size_t dS, std::size_t dB) {
  Mat out = zeros(dS, dS);
  for (std::size_t i = 0; i < dS; ++i) {
    for (std::size_t j = 0; j < dS; ++j) {
      for (std::size_t b = 0; b < dB; ++b) out[i][j] += m[i * dB + b][j * dB + b];
    }
  }
  return out;
}

inline Mat partialTraceBath(const Mat& m, std::size_t dS, std::size_t dB) {
  Mat out = zeros(dB, dB);
  for (std::size_t a = 0; a < dB; ++a) {
    for (std::size_t b = 0; b < dB; ++b) {
      for (std::size_t s = 0; s < dS; ++s) out[a][b] += m[s * dB + a][s * dB + b];
    }
  }
  return out;
}

// Eigenvalues of a Hermitian matrix by the classical cyclic Jacobi method
// with complex rotations: the pivot A[p][q] = |b| e^{i phi} is annihilated by
// R with R[p][p] = c, R[p][q] = -s e^{i phi}, R[q][p] = s e^{-i phi},
// R[q][q] = c, where t = s/c solves t^2 - 2 tau t - 1 = 0 for
// tau = (A[q][q] - A[p][p]) / (2 |b|), taking the smaller-magnitude root.
inline Vec eigvalsHermitian(Mat a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off = std::max(off, std::abs(a[i][j]));
      }
    }
    if (off < 1e-14) {
      Vec values(n);
      for (std::size_t i = 0; i < n; ++i) values[i] = a[i][i].real();
      std::sort(values.begin(), values.end());
      return values;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double absb = std::abs(a[p][q]);
        if (absb < 1e-18) continue;
        const double phi = std::arg(a[p][q]);
        const double tau = (a[q][q].real() - a[p][p].real()) / (2.0 * absb);
        double t = 1.0;
        if (tau > 0.0) {
          t = -1.0 / (tau + std::sqrt(tau * tau + 1.0));
        } else if (tau < 0.0) {
          t = 1.0 / (-tau + std::sqrt(tau * tau + 1.0));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        Mat r = identity(n);
        r[p][p] = c;
        r[p][q] = -s * std::exp(Complexd(0.0, phi));
        r[q][p] = s * std::exp(Complexd(0.0, -phi));
        r[q][q] = c;
        a = multiply(multiply(dagger(r), a), r);
      }
    }
  }
  throw std::runtime_error("oracle eigvalsHermitian: no convergence in 200 sweeps");
}

inline double entropyFromValues(const Vec& values) {
  double s = 0.0;
  for (double v : values) {
    if (v > 1e-12) s -= v * std::log(v);
  }
  return s;
}

inline double entropy(const Mat& rho) { return entropyFromValues(eigvalsHermitian(rho)); }

// Boltzmann weights of a diagonal Hamiltonian, as plain scalar arithmetic.
inline Vec gibbsWeights(const Vec& energies, double beta) {
  double shift = energies[0];
  for (double e : energies) shift = std::min(shift, e);
  Vec w(energies.size());
  double z = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    w[i] = std::exp(-beta * (energies[i] - shift));
    z += w[i];
  }
  for (double& v : w) v /= z;
  return w;
}

inline Mat diagonalState(const Vec& populations) {
  Mat out = zeros(populations.size(), populations.size());
  for (std::size_t i = 0; i < populations.size(); ++i) out[i][i] = populations[i];
  return out;
}

// S(rho || diag(g)) for a full-rank diagonal reference: -S(rho) - sum_i
// rho_ii ln g_i. Valid whenever g is constant on degenerate levels, which a
// Gibbs state of the grouping Hamiltonian always is.
inline double relEntToDiagonal(const Mat& rho, const Vec& g) {
  double cross = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) cross += rho[i][i].real() * std::log(g[i]);
  return -entropy(rho) - cross;
}

inline double averageEnergyDiagonal(const Mat& rho, const Vec& energies) {
  double e = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) e += rho[i][i].real() * energies[i];
  return e;
}

inline double freeEnergyDiagonal(const Mat& rho, const Vec& energies, double beta) {
  return averageEnergyDiagonal(rho, energies) - entropy(rho) / beta;
}

// Dephasing in the computational basis of a diagonal Hamiltonian: zero every
// entry connecting levels whose energies differ by more than the tolerance
// (the eigenspace-projector convention).
inline Mat dephaseDiagonal(const Mat& rho, const Vec& energies, double tol = 1e-9) {
  Mat out = rho;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    for (std::size_t j = 0; j < rho.size(); ++j) {
      if (std::abs(energies[i] - energies[j]) > tol) out[i][j] = 0.0;
    }
  }
  return out;
}

inline double coherence(const Mat& rho, const Vec& energies) {
  return entropy(dephaseDiagonal(rho, energies)) - entropy(rho);
}

// Matrix exponential by plain Taylor summation; adequate for the small test
// matrices it is applied to (norm at most a few).
inline Mat expTaylor(const Mat& a, int terms = 40) {
  const std::size_t n = a.size();
  Mat sum = identity(n);
  Mat power = identity(n);
  double factorial = 1.0;
  for (int k = 1; k <= terms; ++k) {
    power = multiply(power, a);
    factorial *= static_cast<double>(k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum[i][j] += power[i][j] / factorial;
    }
  }
  return sum;
}

// Every scalar of a process report, recomputed from the raw ingredients:
// system and bath energies (diagonal Hamiltonians), the inverse temperature,
// the input states, and the applied unitary. Only plain loops and the Jacobi
// eigensolver above are involved.
struct Report {
  double dES, dEB, dSS, dSB, dFS, dFB;
  double heatStandard, heatNew;
  double sirrStandard, sirrNew;
  double mutualInfo, relEntBathToGibbs;
  double classicalStandard, quantumStandard;
  double classicalNew, quantumNew;
  double correlatedCoherence;
};

inline Report computeReport(const Vec& energiesS, const Vec& energiesB, double beta,
                            const Mat& rhoInS, const Mat& rhoInB, const Mat& u) {
  const std::size_t dS = energiesS.size();
  const std::size_t dB = energiesB.size();
  const Mat rhoOut = conjugate(u, kron(rhoInS, rhoInB));
  const Mat outS = partialTraceSystem(rhoOut, dS, dB);
  const Mat outB = partialTraceBath(rhoOut, dS, dB);

  Vec energiesTotal(dS * dB);
  for (std::size_t i = 0; i < dS; ++i) {
    for (std::size_t j = 0; j < dB; ++j) {
      energiesTotal[i * dB + j] = energiesS[i] + energiesB[j];
    }
  }
  const Vec gibbsS = gibbsWeights(energiesS, beta);
  const Vec gibbsB = gibbsWeights(energiesB, beta);

  Report r{};
  r.dES = averageEnergyDiagonal(outS, energiesS) - averageEnergyDiagonal(rhoInS, energiesS);
  r.dEB = averageEnergyDiagonal(outB, energiesB) - averageEnergyDiagonal(rhoInB, energiesB);
  const double sInS = entropy(rhoInS);
  const double sInB = entropy(rhoInB);
  const double sOutS = entropy(outS);
  const double sOutB = entropy(outB);
  r.dSS = sOutS - sInS;
  r.dSB = sOutB - sInB;
  r.dFS = freeEnergyDiagonal(outS, energiesS, beta) -
          freeEnergyDiagonal(rhoInS, energiesS, beta);
  r.dFB = freeEnergyDiagonal(outB, energiesB, beta) -
          freeEnergyDiagonal(rhoInB, energiesB, beta);
  r.heatStandard = -r.dEB;
  r.heatNew = -r.dSB / beta;
  r.sirrStandard = r.dSS - beta * r.heatStandard;
  r.sirrNew = r.dSS - beta * r.heatNew;
  r.mutualInfo = sOutS + sOutB - entropy(rhoOut);
  r.relEntBathToGibbs = relEntToDiagonal(outB, gibbsB);

  auto classicalDivergence = [](const Mat& rho, const Vec& energies, const Vec& g) {
    return relEntToDiagonal(dephaseDiagonal(rho, energies), g);
  };
  r.classicalStandard = classicalDivergence(rhoInS, energiesS, gibbsS) -
                        classicalDivergence(outS, energiesS, gibbsS);
  r.quantumStandard = coherence(rhoInS, energiesS) - coherence(outS, energiesS);
  r.classicalNew = r.classicalStandard - classicalDivergence(outB, energiesB, gibbsB);
  r.quantumNew = r.quantumStandard - coherence(outB, energiesB);
  r.correlatedCoherence = coherence(rhoOut, energiesTotal) - coherence(outS, energiesS) -
                          coherence(outB, energiesB);
  return r;
}

}  // namespace oracle
