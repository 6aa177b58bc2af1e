#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cournot {

/// Exact representation of the set-valued answers the model produces:
/// finite point lists, closed/open intervals, half-lines, and disjoint
/// unions of those.  Stored as a normalized list of ordered, pairwise
/// disjoint pieces; a piece with lo == hi is a single point.
struct RealSet {
  struct Piece {
    double lo;  // -inf encodes a left half-line
    double hi;  // +inf encodes a right half-line
    bool lo_closed;
    bool hi_closed;

    bool is_point() const { return lo == hi; }
  };

  std::vector<Piece> pieces;

  static RealSet empty() { return RealSet{}; }

  static RealSet point(double v) { return RealSet{{{v, v, true, true}}}; }

  static RealSet points(std::vector<double> vs) {
    std::sort(vs.begin(), vs.end());
    RealSet s;
    for (double v : vs)
      if (s.pieces.empty() || s.pieces.back().lo != v)
        s.pieces.push_back({v, v, true, true});
    return s;
  }

  static RealSet interval(double lo, double hi, bool lo_closed, bool hi_closed) {
    if (lo > hi) throw std::invalid_argument("interval requires lo <= hi");
    if (lo == hi) {
      if (!(lo_closed && hi_closed)) return empty();
      return point(lo);
    }
    return RealSet{{{lo, hi, lo_closed, hi_closed}}};
  }

  static RealSet half_line_left(double bound, bool closed) {
    return RealSet{
        {{-std::numeric_limits<double>::infinity(), bound, false, closed}}};
  }

  static RealSet half_line_right(double bound, bool closed) {
    return RealSet{
        {{bound, std::numeric_limits<double>::infinity(), closed, false}}};
  }

  /// Union of already-disjoint sets; members are sorted by lower end.
  static RealSet unite(const std::vector<RealSet>& members) {
    RealSet s;
    for (const auto& m : members)
      s.pieces.insert(s.pieces.end(), m.pieces.begin(), m.pieces.end());
    std::sort(s.pieces.begin(), s.pieces.end(),
              [](const Piece& a, const Piece& b) {
                return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
              });
    return s;
  }

  bool is_empty() const { return pieces.empty(); }

  std::size_t component_count() const { return pieces.size(); }

  bool contains(double v, double tol = 0.0) const {
    for (const auto& p : pieces) {
      double lo = p.lo - tol, hi = p.hi + tol;
      bool above = p.lo_closed || tol > 0.0 ? v >= lo : v > lo;
      bool below = p.hi_closed || tol > 0.0 ? v <= hi : v < hi;
      if (above && below) return true;
    }
    return false;
  }

  /// Some finite member of each component, for sampling-based checks.
  std::vector<double> representatives(double step = 1.0) const {
    std::vector<double> out;
    for (const auto& p : pieces) {
      if (p.is_point()) {
        out.push_back(p.lo);
      } else if (std::isinf(p.lo) && std::isinf(p.hi)) {
        out.push_back(0.0);
      } else if (std::isinf(p.lo)) {
        out.push_back(p.hi - (p.hi_closed ? 0.0 : step));
      } else if (std::isinf(p.hi)) {
        out.push_back(p.lo + (p.lo_closed ? 0.0 : step));
      } else {
        out.push_back(0.5 * (p.lo + p.hi));
      }
    }
    return out;
  }
};

inline bool approx_equal(const RealSet& a, const RealSet& b, double tol) {
  if (a.pieces.size() != b.pieces.size()) return false;
  for (std::size_t i = 0; i < a.pieces.size(); ++i) {
    const auto &pa = a.pieces[i], &pb = b.pieces[i];
    auto close = [tol](double x, double y) {
      if (std::isinf(x) || std::isinf(y)) return x == y;
      return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
    };
    if (!close(pa.lo, pb.lo) || !close(pa.hi, pb.hi)) return false;
    if (pa.lo_closed != pb.lo_closed || pa.hi_closed != pb.hi_closed)
      return false;
  }
  return true;
}

/// Follower-production class attached to a reaction or equilibrium component.
struct ProductionLabel {
  enum class Kind { zero, interior, at_capacity };
  Kind kind = Kind::zero;
  double value = 0.0;  // the production itself (0, interior value, or k)
};

/// Classifies a spot production into a label, snapping to the boundaries
/// within tol*max(1,k).
inline ProductionLabel classify_production(double y, double k, double tol) {
  const double s = tol * std::max(1.0, k);
  if (y <= s) return {ProductionLabel::Kind::zero, 0.0};
  if (y >= k - s) return {ProductionLabel::Kind::at_capacity, k};
  return {ProductionLabel::Kind::interior, y};
}

}  // namespace cournot
