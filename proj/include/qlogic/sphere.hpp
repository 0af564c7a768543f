#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qlogic/rays.hpp"

namespace qlogic {

using Vec2 = std::array<double, 2>;

Vec3 normalized(const Vec3& v);

/// Unit normal of the plane of C(q), the great circle through q and the
/// equator points +-(q_y, -q_x, 0)/sqrt(q_x^2 + q_y^2). Requires 0 < q_z < 1
/// after normalization.
Vec3 great_circle_pole(const Vec3& q);
bool on_great_circle(const Vec3& q, const Vec3& x, double tolerance = kDefaultTolerance);

/// Central projection onto the tangent plane z = 1. Requires q_z > 0.
Vec2 project_h(const Vec3& q);
/// Unit vector of the northern hemisphere projecting to w.
Vec3 unproject_h(const Vec2& w);

/// A point q~ on C(q) with p on C(q~). In the plane z = 1 the image of q~
/// lies on the line h(C(q)) and on the circle with diameter from the pole
/// image to h(p); of the two intersections the one nearer h(q) is used.
/// Throws PreconditionError when p is on C(q) or the two do not meet.
Vec3 reach_step(const Vec3& q, const Vec3& p, double tolerance = kDefaultTolerance);

struct Shell {
  std::vector<Vec3> points;  // q_0 .. q_n
  std::vector<double> d;     // |h(q_i)|
};

/// n steps, each rotating h(q_i) by 2 pi / n and scaling it by 1 / cos(2 pi / n).
/// orientation -1 rotates clockwise.
Shell shell(const Vec3& q, int n, int orientation = 1);

struct ReachOptions {
  int n = 16;
  double tolerance = kDefaultTolerance;
  int max_n = 1 << 20;
  std::size_t max_points = 8'000'000;
};

struct ReachChain {
  std::vector<Vec3> points;
  int n = 0;  // shell parameter of the successful sweep; 0 for a direct step
  std::vector<double> residuals;  // |q_i . pole(C(q_{i-1}))|, i >= 1
};

/// Chain from q to p with q_i on C(q_{i-1}). Shells turn towards h(p) along
/// the shorter arc; a sweep that passes |h(p)| restarts from q with n doubled.
/// Requires 0 < p_z < q_z < 1 after normalization; fails explicitly when the
/// heights are within 1e-10 or the budget runs out.
ReachChain reach_chain(const Vec3& q, const Vec3& p, const ReachOptions& options = {});

struct ChainCheck {
  bool ok = true;
  double max_residual = 0;
  std::string failure;
};

/// Independent recomputation of every chain claim.
ChainCheck verify_chain(const ReachChain& chain, const Vec3& q, const Vec3& p,
                        double tolerance = kDefaultTolerance);

}  // namespace qlogic
