#pragma once

// Momentum maps on S = C^k (x) C^{M+N} in double precision.
//
// A point psi is a k x (M+N) complex matrix whose column a is psi_a. The
// indefinite form is (psi, phi)_S = sum_a eta_a <psi_a, phi_a> with
// eta = diag(1_M, -1_N) and <u, v> = v^* u (linear in the first slot).
//
//   omega(psi, phi)    = -2 Im (psi, phi)_S
//   <J_R(psi), X>      = i (psi X, psi)_S     = i Tr(X G),   G = eta psi^* psi
//   -i <J_L(psi), Y>   = sum_a eta_a <Y psi_a, psi_a>,       rho = psi eta psi^*
//
// U(M,N) acts on the right by psi -> psi U, U(k) on the left by psi -> g psi.

#include <howe/exact.hpp>
#include <howe/weights.hpp>

#include <Eigen/Dense>
#include <json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace howe::classical {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kDefaultTolerance = 1e-9;

inline Eigen::VectorXd eta(int M, int N) {
  Eigen::VectorXd e(M + N);
  for (int a = 0; a < M + N; ++a) e(a) = a < M ? 1.0 : -1.0;
  return e;
}

inline void check_shape(const CMatrix& psi, int M, int N) {
  if (M < 0 || N < 0 || psi.cols() != M + N) throw ShapeMismatch("point has " + std::to_string(psi.cols()) + " columns, expected M+N");
}

inline Complex form_s(const CMatrix& psi, const CMatrix& phi, int M, int N) {
  check_shape(psi, M, N);
  if (phi.rows() != psi.rows() || phi.cols() != psi.cols()) throw ShapeMismatch("points of different shapes");
  Complex s = 0;
  for (int a = 0; a < M + N; ++a) s += (a < M ? 1.0 : -1.0) * phi.col(a).dot(psi.col(a));
  return s;
}

inline double symplectic_form(const CMatrix& psi, const CMatrix& phi, int M, int N) {
  return -2.0 * form_s(psi, phi, M, N).imag();
}

/// G with <J_R(psi), X> = i Tr(X G).
inline CMatrix moment_right(const CMatrix& psi, int M, int N) {
  check_shape(psi, M, N);
  return eta(M, N).asDiagonal() * (psi.adjoint() * psi);
}

/// i (psi X, psi)_S, straight from the definition.
inline Complex pairing_right(const CMatrix& psi, const CMatrix& X, int M, int N) {
  return Complex(0, 1) * form_s(psi * X, psi, M, N);
}

struct OrbitElement {
  CMatrix rho;
  double tolerance = kDefaultTolerance;

  bool hermitian() const { return (rho - rho.adjoint()).cwiseAbs().maxCoeff() <= tolerance; }

  /// Eigenvalues, descending.
  std::vector<double> spectrum() const {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
  }
};

inline OrbitElement moment_left(const CMatrix& psi, int M, int N, double tol = kDefaultTolerance) {
  check_shape(psi, M, N);
  return {psi * eta(M, N).asDiagonal() * psi.adjoint(), tol};
}

/// i sum_a eta_a <Y psi_a, psi_a>, straight from the definition.
inline Complex pairing_left(const CMatrix& psi, const CMatrix& Y, int M, int N) {
  check_shape(psi, M, N);
  Complex s = 0;
  for (int a = 0; a < M + N; ++a) s += (a < M ? 1.0 : -1.0) * psi.col(a).dot(Y * psi.col(a));
  return Complex(0, 1) * s;
}

/// <rho, Y> = i Tr(rho Y)
inline Complex pairing(const CMatrix& rho, const CMatrix& Y) { return Complex(0, 1) * (rho * Y).trace(); }

/// diag(m_1..m_M, -n_N..-n_1)
inline Eigen::VectorXd target_diagonal(const SignedWeight& w) {
  const int M = w.m.rows(), N = w.n.rows();
  Eigen::VectorXd d(M + N);
  for (int a = 0; a < M; ++a) d(a) = w.m[static_cast<std::size_t>(a)];
  for (int j = 0; j < N; ++j) d(M + j) = -w.n[static_cast<std::size_t>(N - 1 - j)];
  return d;
}

/// (m_1..m_M, 0.., -n_N..-n_1), descending.
inline std::vector<double> target_spectrum(const SignedWeight& w, int k) {
  const auto v = w.at_rank(k);
  return {v.begin(), v.end()};
}

struct ConstrainedPoint {
  CMatrix psi;
  int M = 0, N = 0;
  SignedWeight target;
  std::uint64_t seed = 0;
  int k() const { return static_cast<int>(psi.rows()); }
};

// ---------------------------------------------------------------------------
// Random elements

inline CMatrix random_complex(int rows, int cols, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  CMatrix a(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      a(i, j) = Complex(re, im);
    }
  return a;
}

inline CMatrix random_skew_hermitian(int n, std::mt19937_64& rng, double scale = 1.0) {
  const CMatrix a = random_complex(n, n, rng, scale);
  return (a - a.adjoint()) / 2.0;
}

/// Random element of u(M,N): eta A with A skew-Hermitian.
inline CMatrix random_umn_generator(int M, int N, std::mt19937_64& rng, double scale = 1.0) {
  return eta(M, N).asDiagonal() * random_skew_hermitian(M + N, rng, scale);
}

inline CMatrix random_unitary(int n, std::mt19937_64& rng) { return random_skew_hermitian(n, rng).exp(); }

inline CMatrix random_pseudo_unitary(int M, int N, std::mt19937_64& rng, double scale = 0.5) {
  return random_umn_generator(M, N, rng, scale).exp();
}

inline double pseudo_unitarity_defect(const CMatrix& U, int M, int N) {
  const Eigen::MatrixXd e = eta(M, N).asDiagonal();
  return (U * e.cast<Complex>() * U.adjoint() - e.cast<Complex>()).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Level sets

/// A point of J_R^{-1}(w): orthogonal columns, |psi_a|^2 = m_a and
/// |psi_{M+j}|^2 = n_{N-j} (0-based j), from Gram-Schmidt on seeded
/// Gaussian vectors. Entries of w are positive by construction of
/// SignedWeight (see SignedWeight::from_entries).
inline ConstrainedPoint sample_level_set(const SignedWeight& w, int k, std::uint64_t seed) {
  const int M = w.m.rows(), N = w.n.rows();
  if (k < M + N) throw RankTooSmall("level set of " + w.str() + " needs k >= " + std::to_string(M + N));
  std::mt19937_64 rng(seed);
  CMatrix psi = random_complex(k, M + N, rng);
  for (int a = 0; a < M + N; ++a) {
    for (int pass = 0; pass < 2; ++pass)
      for (int b = 0; b < a; ++b) psi.col(a) -= psi.col(b).dot(psi.col(a)) * psi.col(b);
    psi.col(a).normalize();
  }
  const Eigen::VectorXd d = target_diagonal(w).cwiseAbs();
  for (int a = 0; a < M + N; ++a) psi.col(a) *= std::sqrt(d(a));
  return {psi, M, N, w, seed};
}

/// ||psi U - psi||_F; U must satisfy U eta U^* = eta.
inline double stabilizer_defect(const ConstrainedPoint& p, const CMatrix& U, double tol = kDefaultTolerance) {
  if (U.rows() != p.M + p.N || U.cols() != p.M + p.N) throw ShapeMismatch("U has the wrong size");
  if (pseudo_unitarity_defect(U, p.M, p.N) > tol) throw NotPseudoUnitary("U eta U^* differs from eta");
  return (p.psi * U - p.psi).norm();
}

// ---------------------------------------------------------------------------
// Orbit report

struct OrbitOptions {
  double tolerance = kDefaultTolerance;
  int generators = 100;
};

struct OrbitReport {
  std::string weight;
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<double> spectrum;
  std::vector<double> expected;
  double max_dev = 0;        // spectrum vs expected
  double level_dev = 0;      // moment_right vs D_w
  double pairing_dev = 0;    // both pairing identities, random generators
  double invariance_dev = 0; // rho under psi -> psi U, U in U(M,N)
  double equivariance_dev = 0;  // rho under psi -> g psi vs g rho g^*, and spectrum
  double stabilizer_margin = 0;  // min over random U of defect / (min norm * ||U - 1||_F)
  double tolerance = kDefaultTolerance;

  bool spectrum_ok() const { return max_dev < tolerance && level_dev < tolerance; }
  bool pairing_ok() const { return pairing_dev < tolerance; }
  bool invariance_ok() const { return invariance_dev < tolerance && equivariance_dev < tolerance; }
  bool stabilizer_ok() const { return stabilizer_margin >= 1.0 - tolerance; }
  bool pass() const { return spectrum_ok() && pairing_ok() && invariance_ok() && stabilizer_ok(); }
};

inline OrbitReport verify_orbit(const ConstrainedPoint& p, const OrbitOptions& opt = {}) {
  OrbitReport r;
  r.weight = p.target.str();
  r.k = p.k();
  r.seed = p.seed;
  r.tolerance = opt.tolerance;
  const auto rho = moment_left(p.psi, p.M, p.N, opt.tolerance);
  r.spectrum = rho.spectrum();
  r.expected = target_spectrum(p.target, p.k());
  for (std::size_t i = 0; i < r.spectrum.size(); ++i) r.max_dev = std::max(r.max_dev, std::abs(r.spectrum[i] - r.expected[i]));
  const CMatrix G = moment_right(p.psi, p.M, p.N);
  const CMatrix D = target_diagonal(p.target).cast<Complex>().asDiagonal();
  r.level_dev = (G - D).cwiseAbs().maxCoeff();

  std::mt19937_64 rng(p.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int t = 0; t < opt.generators; ++t) {
    const CMatrix X = random_umn_generator(p.M, p.N, rng);
    r.pairing_dev = std::max(r.pairing_dev, std::abs(pairing_right(p.psi, X, p.M, p.N) - Complex(0, 1) * (X * G).trace()));
    const CMatrix Y = random_skew_hermitian(p.k(), rng);
    r.pairing_dev = std::max(r.pairing_dev, std::abs(pairing_left(p.psi, Y, p.M, p.N) - pairing(rho.rho, Y)));
  }
  const int width = p.M + p.N;
  const double min_norm = width > 0 ? std::sqrt(target_diagonal(p.target).cwiseAbs().minCoeff()) : 0.0;
  r.stabilizer_margin = std::numeric_limits<double>::infinity();
  for (int t = 0; t < 10; ++t) {
    const CMatrix g = random_unitary(p.k(), rng);
    const auto moved = moment_left(g * p.psi, p.M, p.N);
    r.equivariance_dev = std::max(r.equivariance_dev, (moved.rho - g * rho.rho * g.adjoint()).cwiseAbs().maxCoeff());
    const auto sp = moved.spectrum();
    for (std::size_t i = 0; i < sp.size(); ++i) r.equivariance_dev = std::max(r.equivariance_dev, std::abs(sp[i] - r.spectrum[i]));
    if (width == 0) continue;
    const CMatrix U = random_pseudo_unitary(p.M, p.N, rng);
    r.invariance_dev = std::max(r.invariance_dev, (moment_left(p.psi * U, p.M, p.N).rho - rho.rho).cwiseAbs().maxCoeff());
    const double away = (U - CMatrix::Identity(width, width)).norm();
    if (away > 1e-6) r.stabilizer_margin = std::min(r.stabilizer_margin, stabilizer_defect(p, U, opt.tolerance) / (min_norm * away));
  }
  return r;
}

/// Spectrum rounded to 1e-9 so reports do not carry rounding noise.
inline nlohmann::json to_json(const OrbitReport& r) {
  nlohmann::json values = nlohmann::json::array();
  for (double x : r.spectrum) {
    const double v = std::round(x * 1e9) / 1e9;
    values.push_back(v == 0.0 ? 0.0 : v);
  }
  return {{"weight", r.weight},
          {"k", r.k},
          {"seed", r.seed},
          {"spectrum", values},
          {"max_dev", r.max_dev},
          {"checks",
           {{"spectrum", r.spectrum_ok() ? "pass" : "fail"},
            {"pairing", r.pairing_ok() ? "pass" : "fail"},
            {"invariance", r.invariance_ok() ? "pass" : "fail"},
            {"stabilizer", r.stabilizer_ok() ? "pass" : "fail"}}},
          {"pass", r.pass()}};
}

}  // namespace howe::classical
