#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cournot/market.hpp"
#include "cournot/params.hpp"
#include "cournot/sets.hpp"
#include "cournot/spot.hpp"

namespace cournot {

/// A set-valued symmetric reaction: the set itself (forward positions for
/// F(x), productions for X(f)), one follower-production label per component,
/// and the threshold constants that shaped the answer.
struct ReactionResult {
  RealSet set;
  std::vector<ProductionLabel> labels;
  std::map<std::string, double> thresholds;
  bool duplicate_components = false;  // two candidates within tol of each other
};

/// The four jump/window constants of the leader reaction.
///
///   eta1 = k - (alpha_x - Nk)/N * 2(sqrt(N+1)-1)/(M+1)
///   eta3 = k - (alpha_x - Nk)/N * 2(sqrt(N+1)-1)/(2+(M-1)sqrt(N+1))
///   eta2, eta4 = -(a+b)/2 * (1 - sqrt(1 - (a/(a+b))^2)) with
///     eta2: a = 2(alpha_x - Nk)/(M+1),  b = Nk
///     eta4: a = 2(alpha_x - NMk)/(M+1), b = (2M/(M+1))^2 Nk
struct EtaThresholds {
  double eta1, eta2, eta3, eta4;
};

namespace detail {

// Shared eta2/eta4 shape.  The radicand 1 - (a/(a+b))^2 is negative exactly
// when 2a + b < 0; radicands in [-snap, 0] collapse to 0.  on_negative
// decides what a genuinely negative radicand yields (+inf for internal
// window arithmetic, NaN to signal a domain error to the public op).
inline double eta_quadratic(double a, double b, double snap,
                            double on_negative) {
  const double s = a + b;
  if (2.0 * a + b < 0.0) {
    // radicand < 0, except within the snap band around zero
    const double r = s == 0.0 ? -1.0 : 1.0 - (a / s) * (a / s);
    if (s != 0.0 && r >= -snap) return -0.5 * s;
    return on_negative;
  }
  double r = 1.0 - (a / s) * (a / s);
  if (r < 0.0) r = 0.0;  // rounding
  return -0.5 * s * (1.0 - std::sqrt(r));
}

inline double eta1_value(const MarketParams& p) {
  const double root = std::sqrt(p.N + 1.0);
  return p.k - (p.alpha_x - p.N * p.k) / p.N * (2.0 * (root - 1.0) / (p.M + 1));
}

inline double eta3_value(const MarketParams& p) {
  const double root = std::sqrt(p.N + 1.0);
  return p.k - (p.alpha_x - p.N * p.k) / p.N *
                   (2.0 * (root - 1.0) / (2.0 + (p.M - 1) * root));
}

inline double eta2_value(const MarketParams& p, double on_negative) {
  const double a = 2.0 * (p.alpha_x - p.N * p.k) / (p.M + 1);
  const double b = p.N * p.k;
  return eta_quadratic(a, b, p.tol, on_negative);
}

inline double eta4_value(const MarketParams& p, double on_negative) {
  const double m = 2.0 * p.M / (p.M + 1);
  const double a = 2.0 * (p.alpha_x - p.N * p.M * p.k) / (p.M + 1);
  const double b = m * m * p.N * p.k;
  return eta_quadratic(a, b, p.tol, on_negative);
}

// Internal variant: a vacuous eta constraint becomes +inf.  The radicand is
// negative only when alpha_x < NMk/(M+1), where the capacity-exploiting
// deviation branch the threshold guards against is unreachable.
inline EtaThresholds etas_guarded(const MarketParams& p) {
  const double inf = std::numeric_limits<double>::infinity();
  return {eta1_value(p), eta2_value(p, inf), eta3_value(p), eta4_value(p, inf)};
}

}  // namespace detail

/// eta1..eta4 exactly as displayed.  Throws std::domain_error when an
/// eta2/eta4 radicand is genuinely negative (ratio beyond 1); radicands
/// within tol of zero are snapped to zero.
inline EtaThresholds eta_thresholds(const MarketParams& p) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EtaThresholds e{detail::eta1_value(p), detail::eta2_value(p, nan),
                  detail::eta3_value(p), detail::eta4_value(p, nan)};
  if (std::isnan(e.eta2))
    throw std::domain_error("eta2 radicand negative: 1-(a/(a+b))^2 < 0 at alpha_x=" +
                            std::to_string(p.alpha_x));
  if (std::isnan(e.eta4))
    throw std::domain_error("eta4 radicand negative: 1-(a/(a+b))^2 < 0 at alpha_x=" +
                            std::to_string(p.alpha_x));
  return e;
}

/// Symmetric follower reaction correspondence F(x) for common leader
/// production x, driven by xi = alpha_y - Mx:
///   xi < 0                 ->  (-inf, -xi], followers at zero
///   0 <= xi <= xi_bar      ->  { (N-1) xi / (N^2+1) }, interior production
///   xi_bar < xi < (N+1)k   ->  empty (no symmetric reaction)
///   xi >= (N+1)k           ->  [-xi + (N+1)k, inf), followers at capacity
/// with xi_bar = (N^2+1)(N-1) / (N^2 - 2 sqrt(N) + 1) * k.
inline ReactionResult follower_reaction(double x, const MarketParams& p) {
  if (x < 0.0) throw std::invalid_argument("leader production must be >= 0");
  const double n = p.N;
  const double xi = p.alpha_y - p.M * x;
  const double xi_bar =
      (n * n + 1.0) * (n - 1.0) / (n * n - 2.0 * std::sqrt(n) + 1.0) * p.k;
  const double xi_under = (n + 1.0) * p.k;

  ReactionResult r;
  r.thresholds = {{"xi", xi}, {"xi_bar", xi_bar}, {"xi_under", xi_under}};

  auto label_at = [&](double f) {
    const double y = spot_symmetric_production(f, p.M * x, p);
    return classify_production(y, p.k, p.tol);
  };

  if (xi < 0.0 && !p.near(xi, 0.0)) {
    r.set = RealSet::half_line_left(-xi, true);
    r.labels = {{ProductionLabel::Kind::zero, 0.0}};
  } else if (xi <= xi_bar || p.near(xi, xi_bar)) {
    const double f = (n - 1.0) / (n * n + 1.0) * xi;
    r.set = RealSet::point(f);
    r.labels = {label_at(f)};
  } else if (xi < xi_under && !p.near(xi, xi_under)) {
    r.set = RealSet::empty();
  } else {
    r.set = RealSet::half_line_right(-xi + xi_under, true);
    r.labels = {{ProductionLabel::Kind::at_capacity, p.k}};
  }
  return r;
}

/// Symmetric leader reaction correspondence X(f) for common forward
/// position f.  Candidates, with g = f - dC:
///   x1 = [alpha_x]_0 / (M+1)                 on g < -alpha_x/(M+1)
///   x2 = (alpha_x - dC + f) / M              on -alpha_x/(M+1) <= g <=
///                                               min(-alpha_x/(NM+M+1), eta4)
///   x3 = [alpha_x + N(dC-f)]_0 / (M+1)       on -alpha_x/(NM+M+1) < g <=
///                                               max(eta3, k-(alpha_x-Nk))
///   x4 = [alpha_x - Nk]_0 / (M+1)            on g >= k-(alpha_x-Nk), eta1 or
///                                               eta2 depending on alpha_x
/// Up to two distinct reactions can coexist (the x4 window overlapping x2/x3).
inline ReactionResult leader_reaction(double f, const MarketParams& p) {
  const double inf = std::numeric_limits<double>::infinity();
  const double g = f - p.dC;
  const double nm1 = p.N * static_cast<double>(p.M) + p.M + 1;  // NM+M+1
  const EtaThresholds eta = detail::etas_guarded(p);
  const double root = std::sqrt(p.N + 1.0);
  const double big =
      (1.0 + (p.M + 1) * root / ((root - 1.0) * (root - 1.0))) * p.N * p.k;

  const double x1_hi = -p.alpha_x / (p.M + 1);
  const double x2_hi = std::min(-p.alpha_x / nm1, eta.eta4);
  const double x3_hi = p.alpha_x > p.N * p.k
                           ? eta.eta3
                           : p.k - (p.alpha_x - p.N * p.k);
  double x4_lo;
  if (p.alpha_x < p.N * p.k && !p.near(p.alpha_x, p.N * p.k))
    x4_lo = p.k - (p.alpha_x - p.N * p.k);
  else if (p.alpha_x >= big || p.near(p.alpha_x, big))
    x4_lo = eta.eta2;
  else
    x4_lo = eta.eta1;

  ReactionResult r;
  r.thresholds = {{"eta1", eta.eta1}, {"eta2", eta.eta2},
                  {"eta3", eta.eta3}, {"eta4", eta.eta4},
                  {"x1_hi", x1_hi},   {"x2_lo", -p.alpha_x / (p.M + 1)},
                  {"x2_hi", x2_hi},   {"x3_lo", -p.alpha_x / nm1},
                  {"x3_hi", x3_hi},   {"x4_lo", x4_lo}};

  std::vector<double> xs;
  auto below = [&](double v, double b) { return v <= b || p.near(v, b); };
  auto strictly_below = [&](double v, double b) {
    return v < b && !p.near(v, b);
  };

  if (strictly_below(g, x1_hi)) xs.push_back(p.alpha_x / (p.M + 1));
  if (!strictly_below(g, -p.alpha_x / (p.M + 1)) && below(g, x2_hi))
    xs.push_back((p.alpha_x - p.dC + f) / p.M);
  if (!below(g, -p.alpha_x / nm1) && below(g, x3_hi))
    xs.push_back(clamp(p.alpha_x + p.N * (p.dC - f), 0.0, inf) / (p.M + 1));
  if (!strictly_below(g, x4_lo))
    xs.push_back(clamp(p.alpha_x - p.N * p.k, 0.0, inf) / (p.M + 1));

  std::sort(xs.begin(), xs.end());
  std::vector<double> kept;
  for (double v : xs) {
    if (!kept.empty() && p.near(v, kept.back())) {
      r.duplicate_components = true;
      continue;
    }
    kept.push_back(v);
  }

  r.set = RealSet::points(kept);
  for (const auto& piece : r.set.pieces) {
    const double y = spot_symmetric_production(f, p.M * piece.lo, p);
    r.labels.push_back(classify_production(y, p.k, p.tol));
  }
  return r;
}

}  // namespace cournot
