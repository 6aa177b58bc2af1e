#pragma once

#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "cournot/params.hpp"

namespace cournot {

/// Saturation [z]_a^b: a if z <= a, b if z >= b, else z.
inline double clamp(double z, double a, double b) {
  if (a > b) throw std::invalid_argument("clamp requires a <= b");
  if (z <= a) return a;
  if (z >= b) return b;
  return z;
}

/// Inverse demand P(q) = alpha - beta q.  Negative prices are permitted;
/// they occur off-equilibrium.
inline double price(double total_q, const MarketParams& p) {
  return p.alpha - p.beta * total_q;
}

inline double sum(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

/// A (possibly asymmetric) profile of the forward stage: follower forward
/// positions f and leader productions x.
struct StrategyProfile {
  std::vector<double> f_vec;  // length N, unconstrained in sign
  std::vector<double> x_vec;  // length M, each >= 0

  static StrategyProfile symmetric(double f, double x, const MarketParams& p) {
    if (x < 0.0) throw std::invalid_argument("leader production must be >= 0");
    return {std::vector<double>(static_cast<std::size_t>(p.N), f),
            std::vector<double>(static_cast<std::size_t>(p.M), x)};
  }
};

/// Follower j's spot-stage profit: P(total)(y_j - f_j) - c y_j.
inline double follower_spot_profit(std::size_t j, std::span<const double> y_vec,
                                   std::span<const double> f_vec,
                                   std::span<const double> x_vec,
                                   const MarketParams& p) {
  const double total = sum(x_vec) + sum(y_vec);
  return price(total, p) * (y_vec[j] - f_vec[j]) - p.c * y_vec[j];
}

/// Follower j's forward-stage (total) profit under the reduced form
/// (P - c) y_j, evaluated at the spot equilibrium y(f, x) supplied by
/// spot_solver(f_vec, x_vec) -> y_vec.
template <typename SpotSolver>
double follower_total_profit(std::size_t j, std::span<const double> f_vec,
                             std::span<const double> x_vec,
                             const MarketParams& p, SpotSolver&& spot_solver) {
  const std::vector<double> y = spot_solver(f_vec, x_vec);
  const double total = sum(x_vec) + sum(std::span<const double>(y));
  return (price(total, p) - p.c) * y[j];
}

/// Leader i's profit (P - C) x_i at the spot equilibrium y(f, x).
template <typename SpotSolver>
double leader_profit(std::size_t i, std::span<const double> x_vec,
                     std::span<const double> f_vec, const MarketParams& p,
                     SpotSolver&& spot_solver) {
  if (x_vec[i] < 0.0)
    throw std::invalid_argument("leader production must be >= 0");
  const std::vector<double> y = spot_solver(f_vec, x_vec);
  const double total = sum(x_vec) + sum(std::span<const double>(y));
  return (price(total, p) - p.C) * x_vec[i];
}

// Symmetric scalar forms used throughout the closed-form modules.

/// Leader profit at a symmetric profile with common follower production y.
inline double symmetric_leader_profit(double x, double y,
                                      const MarketParams& p) {
  const double q = p.M * x + p.N * y;
  return p.beta * (p.alpha_x - q) * x;
}

/// Follower total profit at a symmetric profile with common production y.
inline double symmetric_follower_profit(double y, double x,
                                        const MarketParams& p) {
  const double q = p.M * x + p.N * y;
  return p.beta * (p.alpha_y - q) * y;
}

}  // namespace cournot
