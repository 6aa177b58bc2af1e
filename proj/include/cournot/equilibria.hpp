#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cournot/params.hpp"
#include "cournot/reactions.hpp"
#include "cournot/sets.hpp"
#include "cournot/spot.hpp"

namespace cournot {

enum class RegionTag { Q1, Q2, Q3, Q4, S1, S2, S3, S4 };

inline const char* to_string(RegionTag t) {
  switch (t) {
    case RegionTag::Q1: return "Q1";
    case RegionTag::Q2: return "Q2";
    case RegionTag::Q3: return "Q3";
    case RegionTag::Q4: return "Q4";
    case RegionTag::S1: return "S1";
    case RegionTag::S2: return "S2";
    case RegionTag::S3: return "S3";
    case RegionTag::S4: return "S4";
  }
  return "?";
}

/// x as an affine function of f (the Q2 continuum: x = (alpha_x - dC + f)/M).
struct AffineMap {
  double offset = 0.0;
  double slope = 0.0;
  double operator()(double f) const { return offset + slope * f; }
};

struct EquilibriumRegion {
  RegionTag tag;
  RealSet f_set;
  RealSet x_set;                    // fixed x value(s); empty if parametric
  std::optional<AffineMap> x_of_f;  // set for the Q2 family
  ProductionLabel y_label;

  double x_at(double f) const {
    if (x_of_f) return (*x_of_f)(f);
    return x_set.pieces.front().lo;
  }
};

/// The full symmetric equilibrium set: the active regions, the zeta
/// thresholds that gate them, and an existence/multiplicity summary.
struct EquilibriumSet {
  std::vector<EquilibriumRegion> regions;
  double zeta1 = 0.0;
  double zeta2 = 0.0;
  bool non_empty = false;
  std::string multiplicity;
};

/// zeta1 = (M+1) dC + min(NM dC, NM k + 2M sqrt(N k dC)): the demand level
/// below which zero-supply equilibria exist.
inline double zeta1_threshold(const MarketParams& p) {
  const double nm = static_cast<double>(p.N) * p.M;
  return (p.M + 1) * p.dC +
         std::min(nm * p.dC, nm * p.k + 2.0 * p.M * std::sqrt(p.N * p.k * p.dC));
}

/// Forward-market zeta2: the upper demand bound of the interior (Q3) region.
inline double zeta2_forward(const MarketParams& p) {
  const double root = std::sqrt(p.N + 1.0);
  const double nm1 = static_cast<double>(p.N) * p.M + p.M + 1;
  const double denom = p.N * (p.N + 1.0) + 2.0 * (1.0 - root);
  return nm1 * p.dC + (p.N * p.N + nm1) / denom *
                          (p.N * p.k - (root - 1.0) * (root - 1.0) * p.dC);
}

/// Stackelberg zeta2: the upper demand bound of the interior (S3) region.
inline double zeta2_stackelberg(const MarketParams& p) {
  const double root = std::sqrt(p.N + 1.0);
  const double nm1 = static_cast<double>(p.N) * p.M + p.M + 1;
  return nm1 * p.dC + (p.M + 1) * root / (2.0 * (root - 1.0)) *
                          (p.N * p.k - (root - 1.0) * (root - 1.0) * p.dC);
}

namespace detail {

inline ProductionLabel label_at(double f, double x, const MarketParams& p) {
  return classify_production(spot_symmetric_production(f, p.M * x, p), p.k,
                             p.tol);
}

}  // namespace detail

/// All symmetric subgame-perfect equilibria of the forward market.
///
/// Regions and their activation conditions:
///   Q1: x = alpha_x/(M+1), f < dC - alpha_x/(M+1)        iff alpha_x <= (M+1)dC
///   Q2: x = (alpha_x - dC + f)/M over a closed f-window  iff alpha_x <=
///       min((NM+M+1)dC, zeta1)
///   Q3: the single interior point                        iff (NM+M+1)dC <
///       alpha_x <= zeta2
///   Q4: x = (alpha_x - Nk)/(M+1), f on a closed right
///       half-line starting at dC + eta1 (or eta2)        iff alpha_x >=
///       (M+1)(dC+k) + Nk
inline EquilibriumSet forward_equilibria(const MarketParams& p) {
  EquilibriumSet out;
  out.zeta1 = zeta1_threshold(p);
  out.zeta2 = zeta2_forward(p);
  const double nm1 = static_cast<double>(p.N) * p.M + p.M + 1;
  const EtaThresholds eta = detail::etas_guarded(p);
  const double root = std::sqrt(p.N + 1.0);
  const double big =
      (1.0 + (p.M + 1) * root / ((root - 1.0) * (root - 1.0))) * p.N * p.k;

  auto le = [&](double v, double b) { return v <= b || p.near(v, b); };
  auto lt = [&](double v, double b) { return v < b && !p.near(v, b); };

  // Q1
  if (le(p.alpha_x, (p.M + 1) * p.dC)) {
    EquilibriumRegion r;
    r.tag = RegionTag::Q1;
    r.x_set = RealSet::point(p.alpha_x / (p.M + 1));
    r.f_set = RealSet::half_line_left(p.dC - p.alpha_x / (p.M + 1), false);
    r.y_label = {ProductionLabel::Kind::zero, 0.0};
    out.regions.push_back(std::move(r));
  }

  // Q2
  if (le(p.alpha_x, std::min(nm1 * p.dC, out.zeta1))) {
    const double lo = std::max(0.0, p.dC - p.alpha_x / (p.M + 1));
    const double hi = p.dC + std::min(-p.alpha_x / nm1, eta.eta4);
    if (lo <= hi || p.near(lo, hi)) {
      EquilibriumRegion r;
      r.tag = RegionTag::Q2;
      r.f_set = RealSet::interval(lo, std::max(lo, hi), true, true);
      r.x_of_f = AffineMap{(p.alpha_x - p.dC) / p.M, 1.0 / p.M};
      r.y_label = {ProductionLabel::Kind::zero, 0.0};
      out.regions.push_back(std::move(r));
    }
  }

  // Q3
  if (lt(nm1 * p.dC, p.alpha_x) && le(p.alpha_x, out.zeta2)) {
    const double denom = p.N * static_cast<double>(p.N) + nm1;
    const double f = (p.N - 1) * (p.alpha_x - nm1 * p.dC) / denom;
    const double x = (p.N + 1) * (p.alpha_x + p.N * p.N * p.dC) / denom;
    EquilibriumRegion r;
    r.tag = RegionTag::Q3;
    r.f_set = RealSet::point(f);
    r.x_set = RealSet::point(x);
    r.y_label = detail::label_at(f, x, p);
    out.regions.push_back(std::move(r));
  }

  // Q4
  if (le((p.M + 1) * (p.dC + p.k) + p.N * p.k, p.alpha_x)) {
    const double x = (p.alpha_x - p.N * p.k) / (p.M + 1);
    const double f_lo =
        p.dC + (lt(big, p.alpha_x) ? eta.eta2 : eta.eta1);
    EquilibriumRegion r;
    r.tag = RegionTag::Q4;
    r.f_set = RealSet::half_line_right(f_lo, true);
    r.x_set = RealSet::point(x);
    r.y_label = {ProductionLabel::Kind::at_capacity, p.k};
    out.regions.push_back(std::move(r));
  }

  out.non_empty = !out.regions.empty();
  if (out.regions.empty())
    out.multiplicity = "no symmetric equilibrium";
  else if (out.regions.size() == 1 &&
           out.regions.front().tag == RegionTag::Q3)
    out.multiplicity = "unique";
  else
    out.multiplicity = std::to_string(out.regions.size()) +
                       " region(s), continuum within half-line/interval components";
  return out;
}

/// All symmetric Stackelberg equilibria X(0) (followers hold no forwards).
///
///   S1: x = alpha_x/(M+1)            iff alpha_x < (M+1)dC
///   S2: x = (alpha_x - dC)/M         iff (M+1)dC <= alpha_x <= min((NM+M+1)dC, zeta1)
///   S3: x = (alpha_x + N dC)/(M+1)   iff (NM+M+1)dC < alpha_x <= zeta2_st
///   S4: x = (alpha_x - Nk)/(M+1)     iff alpha_x >= Nk + N(M+1)(dC+k)/(2(sqrt(N+1)-1))
///       (or  >= Nk + (M+1)(dC + sqrt(Nk dC)) when (sqrt(N+1)-1)^2 dC >= Nk)
inline EquilibriumSet stackelberg_equilibria(const MarketParams& p) {
  EquilibriumSet out;
  out.zeta1 = zeta1_threshold(p);
  out.zeta2 = zeta2_stackelberg(p);
  const double inf = std::numeric_limits<double>::infinity();
  const double nm1 = static_cast<double>(p.N) * p.M + p.M + 1;
  const double root = std::sqrt(p.N + 1.0);

  auto le = [&](double v, double b) { return v <= b || p.near(v, b); };
  auto lt = [&](double v, double b) { return v < b && !p.near(v, b); };

  auto push = [&](RegionTag tag, double x) {
    EquilibriumRegion r;
    r.tag = tag;
    r.f_set = RealSet::point(0.0);
    r.x_set = RealSet::point(x);
    r.y_label = detail::label_at(0.0, x, p);
    out.regions.push_back(std::move(r));
  };

  if (lt(p.alpha_x, (p.M + 1) * p.dC))
    push(RegionTag::S1, clamp(p.alpha_x, 0.0, inf) / (p.M + 1));
  if (le((p.M + 1) * p.dC, p.alpha_x) &&
      le(p.alpha_x, std::min(nm1 * p.dC, out.zeta1)))
    push(RegionTag::S2, (p.alpha_x - p.dC) / p.M);
  if (lt(nm1 * p.dC, p.alpha_x) && le(p.alpha_x, out.zeta2))
    push(RegionTag::S3, clamp(p.alpha_x + p.N * p.dC, 0.0, inf) / (p.M + 1));

  const double s4_threshold =
      (root - 1.0) * (root - 1.0) * p.dC < p.N * p.k
          ? p.N * p.k + p.N * (p.M + 1) * (p.dC + p.k) / (2.0 * (root - 1.0))
          : p.N * p.k + (p.M + 1) * (p.dC + std::sqrt(p.N * p.k * p.dC));
  if (!lt(p.alpha_x, s4_threshold))
    push(RegionTag::S4, clamp(p.alpha_x - p.N * p.k, 0.0, inf) / (p.M + 1));

  out.non_empty = !out.regions.empty();
  out.multiplicity = out.regions.size() == 2 ? "two equilibria"
                     : out.regions.size() == 1 ? "unique"
                                               : std::to_string(out.regions.size()) + " equilibria";
  return out;
}

}  // namespace cournot
