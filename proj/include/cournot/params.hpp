#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cournot {

/// Default relative tolerance for threshold/boundary classification.
/// Overridable via the COURNOT_TOLERANCE environment variable.
inline double default_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("COURNOT_TOLERANCE")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0.0) return v;
    }
    return 1e-9;
  }();
  return tol;
}

/// Market primitives for M leaders and N capacity-constrained followers
/// facing linear inverse demand P(q) = alpha - beta q.
///
/// Leaders commit productions in the forward stage at marginal cost C;
/// followers sell forward contracts, then produce up to capacity k in the
/// spot stage at marginal cost c >= C.  Derived normalized quantities:
///   alpha_x = (alpha - C)/beta,  alpha_y = (alpha - c)/beta,
///   dC = (c - C)/beta,           alpha_y = alpha_x - dC.
struct MarketParams {
  double alpha = 0.0;
  double beta = 1.0;
  double C = 1.0;
  double c = 1.0;
  int M = 1;
  int N = 2;
  double k = 1.0;
  double tol = 1e-9;

  // derived
  double alpha_x = 0.0;
  double alpha_y = 0.0;
  double dC = 0.0;

  /// Boundary classification scale: |v - b| <= tol*max(1,|b|) counts as "on"
  /// the boundary b and is classified per the stated weak/strict inequality.
  bool near(double v, double b) const {
    double s = 1.0;
    if (b < 0) s = -b > s ? -b : s;
    if (b > 0) s = b > s ? b : s;
    return (v > b ? v - b : b - v) <= tol * s;
  }
};

/// Validates primitives and fills in the normalized quantities.
/// Throws std::invalid_argument when an invariant fails, including
/// alpha_x < 0 (the model is only analyzed for alpha >= C).
inline MarketParams make_params(double alpha, double beta, double C, double c,
                                int M, int N, double k,
                                double tol = default_tolerance()) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (!(C > 0.0)) throw std::invalid_argument("C must be > 0");
  if (!(c >= C)) throw std::invalid_argument("c must be >= C");
  if (!(k > 0.0)) throw std::invalid_argument("k must be > 0");
  if (M < 1) throw std::invalid_argument("M must be >= 1");
  if (N < 2) throw std::invalid_argument("N must be >= 2");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  MarketParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.C = C;
  p.c = c;
  p.M = M;
  p.N = N;
  p.k = k;
  p.tol = tol;
  p.alpha_x = (alpha - C) / beta;
  p.alpha_y = (alpha - c) / beta;
  p.dC = (c - C) / beta;
  if (p.alpha_x < 0.0)
    throw std::invalid_argument("alpha_x = (alpha - C)/beta must be >= 0");
  return p;
}

/// Convenience builder from the normalized quantities (beta = 1, C = 1).
inline MarketParams make_normalized_params(double alpha_x, double dC, int M,
                                           int N, double k,
                                           double tol = default_tolerance()) {
  const double beta = 1.0, C = 1.0;
  return make_params(C + beta * alpha_x, beta, C, C + beta * dC, M, N, k, tol);
}

}  // namespace cournot
