#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cournot/market.hpp"
#include "cournot/params.hpp"

namespace cournot {

/// The unique spot-stage Nash equilibrium for given forwards and leader
/// commitments: follower productions, total market quantity, and price.
struct SpotOutcome {
  std::vector<double> y_vec;
  double total_q = 0.0;
  double price = 0.0;
};

inline SpotOutcome make_outcome(std::vector<double> y,
                                std::span<const double> x_vec,
                                const MarketParams& p) {
  SpotOutcome o;
  o.y_vec = std::move(y);
  o.total_q = sum(x_vec) + sum(std::span<const double>(o.y_vec));
  o.price = price(o.total_q, p);
  return o;
}

/// Symmetric forwards: every follower produces
///   y = [(alpha_y + f - sum x) / (N+1)]_0^k.
inline double spot_symmetric_production(double f, double x_total,
                                        const MarketParams& p) {
  return clamp((p.alpha_y + f - x_total) / (p.N + 1), 0.0, p.k);
}

inline SpotOutcome spot_symmetric(double f, std::span<const double> x_vec,
                                  const MarketParams& p) {
  const double y = spot_symmetric_production(f, sum(x_vec), p);
  return make_outcome(std::vector<double>(static_cast<std::size_t>(p.N), y),
                      x_vec, p);
}

/// One deviator l fixed at production y_l, everyone else at forward f_others:
/// the N-1 non-deviators play the sub-equilibrium
///   y_j = [(alpha_y + f - sum x - y_l) / N]_0^k.
inline double spot_one_deviator(double f_others, double y_l,
                                std::span<const double> x_vec,
                                const MarketParams& p) {
  return clamp((p.alpha_y + f_others - sum(x_vec) - y_l) / p.N, 0.0, p.k);
}

/// Follower j's unique best response on [0, k] given the rest of the market:
///   y = [(alpha_y + f_j - sum x - sum y_{-j}) / 2]_0^k
/// (strictly concave spot profit, KKT corner rules at 0 and k).
inline double spot_best_response(std::size_t j, std::span<const double> f_vec,
                                 std::span<const double> x_vec,
                                 std::span<const double> y_others,
                                 const MarketParams& p) {
  const double rest = sum(x_vec) + sum(y_others);
  return clamp((p.alpha_y + f_vec[j] - rest) / 2.0, 0.0, p.k);
}

}  // namespace cournot
