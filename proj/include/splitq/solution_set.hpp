#pragma once

/// Solution sets: isolated exact points, isolated float points (irrational
/// roots), and parametric families.

#include <algorithm>
#include <string>
#include <vector>

#include "splitq/family.hpp"
#include "splitq/linear.hpp"

namespace splitq {

struct SolutionSet {
  std::vector<SplitQuaternion> points;
  std::vector<SplitQuaternionF> float_points;
  std::vector<Family> families;
  std::vector<std::string> notes;

  bool empty() const { return points.empty() && float_points.empty() && families.empty(); }

  void add_point(const SplitQuaternion& x) {
    if (std::find(points.begin(), points.end(), x) == points.end()) points.push_back(x);
  }
  void add_point(const SplitQuaternionF& x) {
    for (auto& p : float_points)
      if (detail::same(p, x)) return;
    float_points.push_back(x);
  }
  /// Square-root families with a perfect-square radicand are split here.
  void add_family(const Family& f) {
    for (auto& g : split_perfect_square(f)) {
      if (g.dimension() == 0 && !g.root && !g.has_sqrt()) {
        // A zero-parameter family is a point.
        SplitQuaternion x;
        std::vector<Scalar> none;
        for (int k = 0; k < 4; ++k) x[k] = g.components[k].eval(std::span<const Scalar>(none));
        add_point(x);
        continue;
      }
      // sigma = +-1 absorbs the sign; keep the first coefficient positive.
      auto first = std::find_if(g.root_coef.begin(), g.root_coef.end(), [](const Scalar& r) { return !is_zero(r); });
      if (first != g.root_coef.end() && sgn(*first) < 0)
        for (auto& r : g.root_coef) r = -r;
      families.push_back(g);
    }
  }
  void append(const SolutionSet& o) {
    for (auto& p : o.points) add_point(p);
    for (auto& p : o.float_points) add_point(p);
    families.insert(families.end(), o.families.begin(), o.families.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }

  bool contains(const SplitQuaternion& x) const {
    if (std::find(points.begin(), points.end(), x) != points.end()) return true;
    for (auto& f : families)
      if (f.membership(x)) return true;
    return false;
  }
  bool contains(const SplitQuaternionF& x, double tol = 1e-9) const {
    for (auto& p : points)
      if (detail::same(to_float(p), x, tol)) return true;
    for (auto& p : float_points)
      if (detail::same(p, x, tol)) return true;
    for (auto& f : families)
      if (f.membership(x, tol)) return true;
    return false;
  }

  /// Drops isolated points already covered by a family.
  void tidy() {
    std::erase_if(points, [&](const SplitQuaternion& x) {
      return std::any_of(families.begin(), families.end(), [&](const Family& f) { return f.membership(x).has_value(); });
    });
  }

  /// The set {x - shift : x in this} for a real shift.
  SolutionSet translated(const Scalar& shift) const {
    if (is_zero(shift)) return *this;
    SolutionSet out;
    for (auto& p : points) out.points.push_back(p - SplitQuaternion(shift));
    for (auto& p : float_points) out.float_points.push_back(p - SplitQuaternionF(shift.get_d()));
    for (auto& f : families) out.families.push_back(f.translated(shift));
    out.notes = notes;
    return out;
  }
};

}  // namespace splitq
