#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cournot/equilibria.hpp"
#include "cournot/params.hpp"
#include "cournot/reactions.hpp"

namespace cournot {

enum class RegimeContext {
  follower_reaction,
  leader_reaction,
  forward_market,
  stackelberg
};

enum class RegimeVerdict { gap, overlap, degenerate };

inline const char* to_string(RegimeContext c) {
  switch (c) {
    case RegimeContext::follower_reaction: return "FollowerReaction";
    case RegimeContext::leader_reaction: return "LeaderReaction";
    case RegimeContext::forward_market: return "ForwardMarket";
    case RegimeContext::stackelberg: return "Stackelberg";
  }
  return "?";
}

inline const char* to_string(RegimeVerdict v) {
  switch (v) {
    case RegimeVerdict::gap: return "Gap";
    case RegimeVerdict::overlap: return "Overlap";
    case RegimeVerdict::degenerate: return "Degenerate";
  }
  return "?";
}

/// A finite-size rate ratio together with the constant that bounds it
/// (taken from the corresponding proof chain).
struct RateCheck {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
};

/// Classification output of the structural lemmas: the production ceiling
/// y_bar, the window [lower, upper] the lemma is about, the verdict, and
/// the finite-size rate ratios standing in for the asymptotic claims.
struct RegimeReport {
  RegimeContext context = RegimeContext::follower_reaction;
  double y_bar = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  RegimeVerdict verdict = RegimeVerdict::degenerate;
  double rate_ratio = 0.0;
  std::vector<RateCheck> rates;
  std::map<std::string, double> thresholds;
};

/// Follower-side never-an-equilibrium gap (leader productions with no
/// symmetric follower reaction).  In xi = alpha_y - Mx coordinates the
/// reaction set is empty strictly between
///   xi_bar = (N^2+1)(N-1)/(N^2-2 sqrt(N)+1) k   and   xi_under = (N+1)k,
/// and the supported interior productions top out at
///   y_bar = (1 - (N-2 sqrt(N)+1)/(N^2-2 sqrt(N)+1)) k.
inline RegimeReport follower_gap(const MarketParams& p) {
  const double n = p.N;
  const double rn = std::sqrt(n);
  const double y_bar = (1.0 - (n - 2.0 * rn + 1.0) / (n * n - 2.0 * rn + 1.0)) * p.k;
  const double xi_bar = (n * n + 1.0) * (n - 1.0) / (n * n - 2.0 * rn + 1.0) * p.k;
  const double xi_under = (n + 1.0) * p.k;

  RegimeReport r;
  r.context = RegimeContext::follower_reaction;
  r.y_bar = y_bar;
  r.lower = xi_bar;
  r.upper = xi_under;
  r.verdict = RegimeVerdict::gap;
  r.rate_ratio = n * (1.0 - y_bar / p.k);
  r.rates = {{"y_gap", r.rate_ratio,
              (n + 1.0) / n * (n * n / (n * n - 2.0 * rn))},
             {"xi_gap", n * (xi_under - xi_bar) / xi_under,
              2.0 * ((n * n + 1.0) / (n * n)) * (n * n / (n * n - 2.0 * rn))}};
  r.thresholds = {{"xi_bar", xi_bar}, {"xi_under", xi_under}};
  return r;
}

/// Leader drive-out window: the f-interval carrying the strictly increasing
/// zero-follower-production branch x = (alpha_x - dC + f)/M of X(f), clamped
/// to the equilibrium-relevant part (f >= 0).  Nonempty iff
/// alpha_x <= min((NM+M+1) dC, zeta1).
inline RegimeReport leader_driveout_interval(const MarketParams& p) {
  const double nm1 = static_cast<double>(p.N) * p.M + p.M + 1;
  const EtaThresholds eta = detail::etas_guarded(p);
  const double reaction_lo = p.dC - p.alpha_x / (p.M + 1);
  const double lo = std::max(0.0, reaction_lo);
  const double hi = p.dC + std::min(-p.alpha_x / nm1, eta.eta4);

  RegimeReport r;
  r.context = RegimeContext::leader_reaction;
  r.y_bar = 0.0;
  r.lower = lo;
  r.upper = hi;
  r.verdict = hi >= lo ? RegimeVerdict::overlap : RegimeVerdict::degenerate;
  const double width = std::max(0.0, hi - lo);
  r.rate_ratio = p.alpha_x > 0.0 ? p.M * width / p.alpha_x : 0.0;
  r.rates = {{"driveout_width", r.rate_ratio,
              static_cast<double>(p.N) / (p.N + 1.0)}};
  r.thresholds = {{"reaction_lo", reaction_lo},
                  {"eta4", eta.eta4},
                  {"zeta1", zeta1_threshold(p)},
                  {"nonempty_alpha_hi", std::min(nm1 * p.dC, zeta1_threshold(p))}};
  return r;
}

/// Leader-side jump (Lemma on segment (iii)/(iv) transition), valid only for
/// alpha_x > Nk: the production ceiling below capacity and the f-window
/// [dC+eta1, dC+eta3] carrying two leader reactions.
inline RegimeReport leader_jump(const MarketParams& p) {
  if (!(p.alpha_x > p.N * p.k))
    throw std::invalid_argument("leader_jump requires alpha_x > Nk");
  const double root = std::sqrt(p.N + 1.0);
  const EtaThresholds eta = detail::etas_guarded(p);
  const double big_small =
      (1.0 + (p.M + 1) * root / ((root - 1.0) * (root - 1.0))) * p.N * p.k;
  const double big_full =
      big_small + (p.M - 1) * root / (root - 1.0) * p.N * p.k;

  RegimeReport r;
  r.context = RegimeContext::leader_reaction;

  if (p.alpha_x <= big_full) {
    // y at the x3 branch evaluated at f = dC + eta3
    const double f = p.dC + eta.eta3;
    const double x3 = clamp(p.alpha_x + p.N * (p.dC - f), 0.0,
                            std::numeric_limits<double>::infinity()) /
                      (p.M + 1);
    r.y_bar = spot_symmetric_production(f, p.M * x3, p);
  } else {
    r.y_bar = 0.0;
  }

  const double f_lo = p.dC + (p.alpha_x <= big_small ? eta.eta1 : eta.eta2);
  const double f_hi = p.dC + eta.eta3;
  r.lower = f_lo;
  r.upper = f_hi;
  r.verdict = f_hi >= f_lo - p.tol ? RegimeVerdict::overlap
                                   : RegimeVerdict::degenerate;
  if (p.alpha_x <= big_small) {
    const double width = std::max(0.0, f_hi - f_lo);
    r.rate_ratio = width * p.M * std::sqrt(static_cast<double>(p.N)) /
                   (p.alpha_x - p.N * p.k);
    if (p.M >= 2) {
      const double bound = 2.0 * (root / std::sqrt(static_cast<double>(p.N))) *
                           (static_cast<double>(p.M) / (p.M - 1));
      r.rates = {{"jump_width", r.rate_ratio, bound}};
    } else {
      r.rates = {{"jump_width", r.rate_ratio, 0.0}};  // eta1 == eta3 at M=1
    }
  }
  r.thresholds = {{"eta1", eta.eta1}, {"eta2", eta.eta2},
                  {"eta3", eta.eta3}, {"alpha_big", big_small},
                  {"alpha_big_full", big_full}};
  return r;
}

/// Existence/multiplicity regime of the forward market in alpha_x-space:
/// Gap (Q empty strictly between alpha_bar and alpha_under) when there are
/// too few leaders, Overlap (both the interior point and the at-capacity
/// family active on [alpha_under, alpha_bar]) otherwise.
inline RegimeReport market_regime(const MarketParams& p) {
  const double root = std::sqrt(p.N + 1.0);
  const double case1 = (root - 1.0) * (root - 1.0) * p.dC < p.N * p.k;
  const double alpha_bar = case1 ? zeta2_forward(p) : zeta1_threshold(p);
  const double alpha_under = (p.M + 1) * (p.dC + p.k) + p.N * p.k;

  RegimeReport r;
  r.context = RegimeContext::forward_market;
  const double kprime =
      case1 ? p.k - (root - 1.0) * (root - 1.0) * p.dC / p.N : 0.0;
  if (case1) {
    const double nm1 = static_cast<double>(p.N) * p.M + p.M + 1;
    r.y_bar = p.N / (p.N * static_cast<double>(p.N) + nm1) *
              (alpha_bar - nm1 * p.dC);
  } else {
    r.y_bar = 0.0;
  }
  r.lower = alpha_under;
  r.upper = alpha_bar;
  r.verdict = alpha_bar < alpha_under ? RegimeVerdict::gap
                                      : RegimeVerdict::overlap;

  // Displayed M-threshold for the Gap condition (dC=0: M < N sqrt(N+1) - 1).
  double m_threshold;
  if (p.dC == 0.0) {
    m_threshold = p.N * root - 1.0;
  } else if (case1) {
    const double core = (p.N * p.k - (root - 1.0) * (root - 1.0) * p.dC);
    const double w2 = p.N * static_cast<double>(p.N) + (root - 1.0) * (root - 1.0);
    m_threshold = ((p.N + 1) * p.k - (p.N * static_cast<double>(p.N) + 1.0) / w2 * core) /
                  (p.N * p.dC - p.k + (p.N + 1.0) / w2 * core);
  } else {
    m_threshold = ((p.N + 1) * p.k - p.dC) /
                  (p.N * p.k + p.dC - p.k + 2.0 * std::sqrt(p.N * p.k * p.dC));
  }

  if (r.verdict == RegimeVerdict::gap) {
    r.rate_ratio = p.N * (alpha_under - alpha_bar) / alpha_under;
    r.rates = {{"gap_width", (alpha_under - alpha_bar) / alpha_under, 2.0 / p.N}};
  } else {
    r.rate_ratio =
        p.N * std::sqrt(static_cast<double>(p.N)) * (alpha_bar - alpha_under) /
        std::max(alpha_under, p.tol);
    r.rates = {{"overlap_width", r.rate_ratio,
                2.0 * std::sqrt((p.N + 2.0) / p.N)}};
  }
  if (kprime > 0.0)
    r.rates.push_back({"y_gap", p.N * (1.0 - r.y_bar / kprime),
                       static_cast<double>(p.N) / (p.N + 1.0)});
  r.thresholds = {{"alpha_bar", alpha_bar},
                  {"alpha_under", alpha_under},
                  {"m_threshold", m_threshold},
                  {"k_prime", kprime}};
  return r;
}

/// Zero-supply regime: zeta1 and the piecewise Stackelberg leader production
/// while followers stay out of the market,
///   x(a) = a/(M+1)      for a <  (M+1) dC,
///   x(a) = (a - dC)/M   for (M+1) dC <= a <= zeta1.
struct ZeroSupplyReport {
  double zeta1 = 0.0;
  double kink = 0.0;         // (M+1) dC
  double slope_below = 0.0;  // 1/(M+1)
  double slope_above = 0.0;  // 1/M
  double dC = 0.0;
  double x_at(double a) const {
    return a < kink ? a * slope_below : (a - dC) * slope_above;
  }
};

inline ZeroSupplyReport zero_supply_threshold(const MarketParams& p) {
  ZeroSupplyReport r;
  r.zeta1 = zeta1_threshold(p);
  r.kink = (p.M + 1) * p.dC;
  r.slope_below = 1.0 / (p.M + 1);
  r.slope_above = 1.0 / p.M;
  r.dC = p.dC;
  return r;
}

/// Stackelberg never-an-equilibrium production gap (y_bar, k): unlike the
/// forward market's, it widens with N toward k/2.
inline RegimeReport stackelberg_gap(const MarketParams& p) {
  const double root = std::sqrt(p.N + 1.0);
  const double case1 = (root - 1.0) * (root - 1.0) * p.dC < p.N * p.k;
  const double kprime =
      std::max(0.0, p.k - (root - 1.0) * (root - 1.0) * p.dC / p.N);

  RegimeReport r;
  r.context = RegimeContext::stackelberg;
  r.y_bar = case1 ? (1.0 + 1.0 / root) * 0.5 * kprime : 0.0;

  double alpha_bar, alpha_under;
  if (case1) {
    alpha_bar = zeta2_stackelberg(p);
    alpha_under =
        p.N * p.k + p.N * (p.M + 1) * (p.dC + p.k) / (2.0 * (root - 1.0));
  } else {
    alpha_bar = zeta1_threshold(p);
    alpha_under = p.N * p.k + (p.M + 1) * (p.dC + std::sqrt(p.N * p.k * p.dC));
  }
  r.lower = alpha_under;
  r.upper = alpha_bar;
  r.verdict = alpha_bar >= alpha_under - p.tol ? RegimeVerdict::overlap
                                               : RegimeVerdict::degenerate;
  if (case1 && kprime > p.tol) {
    r.rate_ratio = std::sqrt(static_cast<double>(p.N)) *
                   (2.0 * r.y_bar / kprime - 1.0);
    r.rates = {{"stack_expansion", r.rate_ratio, 1.0}};
  } else {
    r.rate_ratio = 0.0;
  }
  r.thresholds = {{"alpha_bar", alpha_bar},
                  {"alpha_under", alpha_under},
                  {"k_prime", kprime}};
  return r;
}

}  // namespace cournot
