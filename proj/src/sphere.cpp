#include "qlogic/sphere.hpp"

#include <cmath>
#include <numbers>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

double dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

}  // namespace

Vec3 normalized(const Vec3& v) {
  const double n = std::sqrt(dot(v, v));
  if (!(n > 0) || !std::isfinite(n)) throw PreconditionError("zero or non-finite vector");
  return {v[0] / n, v[1] / n, v[2] / n};
}

Vec3 great_circle_pole(const Vec3& q) {
  const Vec3 u = normalized(q);
  const double r = std::hypot(u[0], u[1]);
  if (!(u[2] > 0) || r == 0) {
    throw PreconditionError("C(q) needs q strictly northern and off the pole");
  }
  return {u[2] * u[0] / r, u[2] * u[1] / r, -r};
}

bool on_great_circle(const Vec3& q, const Vec3& x, double tolerance) {
  return std::abs(dot(normalized(x), great_circle_pole(q))) <= tolerance;
}

Vec2 project_h(const Vec3& q) {
  if (!(q[2] > 0)) throw PreconditionError("projection needs q_z > 0");
  return {q[0] / q[2], q[1] / q[2]};
}

Vec3 unproject_h(const Vec2& w) { return normalized({w[0], w[1], 1.0}); }

Vec3 reach_step(const Vec3& q, const Vec3& p, double tolerance) {
  const Vec3 m = great_circle_pole(q);
  const Vec3 pu = normalized(p);
  if (std::abs(dot(pu, m)) <= tolerance) {
    throw PreconditionError("p already lies on C(q); use direct membership");
  }
  const Vec2 Q = project_h(normalized(q));
  const Vec2 P = project_h(pu);
  const Vec2 perp{-Q[1], Q[0]};
  // X = Q + t perp;  |X|^2 = X.P  <=>  A t^2 + B t + C = 0
  const double a = dot2(Q, Q);
  const double b = -dot2(P, perp);
  const double c = a - dot2(P, Q);
  const double disc = b * b - 4 * a * c;
  if (!(disc > 0)) {
    throw PreconditionError("C(q) does not meet the Thales circle over the pole and p");
  }
  const double s = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  const double t1 = s / a, t2 = c / s;
  const double t = std::abs(t1) < std::abs(t2) ? t1 : t2;
  return unproject_h({Q[0] + t * perp[0], Q[1] + t * perp[1]});
}

Shell shell(const Vec3& q, int n, int orientation) {
  if (n < 5) throw PreconditionError("shell needs n >= 5");
  if (orientation != 1 && orientation != -1) throw PreconditionError("orientation must be +-1");
  const Vec3 u = normalized(q);
  great_circle_pole(u);
  const double angle = 2 * std::numbers::pi / n;
  const double c = std::cos(angle), s = orientation * std::sin(angle);
  Shell out;
  Vec2 w = project_h(u);
  out.points.push_back(u);
  out.d.push_back(std::hypot(w[0], w[1]));
  for (int i = 0; i < n; ++i) {
    w = {(c * w[0] - s * w[1]) / c, (s * w[0] + c * w[1]) / c};
    out.points.push_back(unproject_h(w));
    out.d.push_back(std::hypot(w[0], w[1]));
  }
  return out;
}

ReachChain reach_chain(const Vec3& q_in, const Vec3& p_in, const ReachOptions& options) {
  const Vec3 q = normalized(q_in);
  const Vec3 p = normalized(p_in);
  if (!(p[2] > 0 && p[2] < q[2] && q[2] < 1)) {
    throw PreconditionError("reach_chain needs 0 < p_z < q_z < 1");
  }
  if (q[2] - p[2] < 1e-10) {
    throw PreconditionError("p_z within 1e-10 of q_z: tolerance not achievable");
  }
  const double tol = options.tolerance;
  auto finish = [&](ReachChain chain) {
    chain.points.back() = p;
    for (std::size_t i = 1; i < chain.points.size(); ++i) {
      chain.residuals.push_back(
          std::abs(dot(chain.points[i], great_circle_pole(chain.points[i - 1]))));
    }
    for (double r : chain.residuals) {
      if (!(r <= tol)) throw Error("reach chain residual " + std::to_string(r) + " above tolerance");
    }
    return chain;
  };

  if (on_great_circle(q, p, tol)) return finish({{q, p}, 0, {}});

  const Vec2 P = project_h(p);
  const double dp = std::hypot(P[0], P[1]);
  const Vec2 Q0 = project_h(q);
  const int orientation = Q0[0] * P[1] - Q0[1] * P[0] >= 0 ? 1 : -1;
  std::size_t budget = options.max_points;
  for (int n = options.n; n <= options.max_n; n *= 2) {
    std::vector<Vec3> visited{q};
    std::size_t checked = 0;
    bool overshoot = false;
    for (;;) {
      for (; checked < visited.size(); ++checked) {
        const Vec3& qi = visited[checked];
        auto prefix = [&] {
          return std::vector<Vec3>(visited.begin(), visited.begin() + checked + 1);
        };
        if (on_great_circle(qi, p, tol)) {
          auto pts = prefix();
          pts.push_back(p);
          return finish({pts, n, {}});
        }
        const Vec2 Qi = project_h(qi);
        if (dot2(P, Qi) > dot2(Qi, Qi)) {
          auto pts = prefix();
          pts.push_back(reach_step(qi, p, tol));
          pts.push_back(p);
          return finish({pts, n, {}});
        }
      }
      if (overshoot) break;
      const Shell s = shell(visited.back(), n, orientation);
      for (std::size_t i = 1; i < s.points.size(); ++i) {
        if (budget-- == 0) throw SearchBoundExceeded("reach_chain point budget exhausted");
        // Past d(p) no later circle can separate p from the pole.
        if (s.d[i] >= dp) {
          overshoot = true;
          break;
        }
        visited.push_back(s.points[i]);
      }
    }
  }
  throw Error("no reach chain found up to n = " + std::to_string(options.max_n));
}

ChainCheck verify_chain(const ReachChain& chain, const Vec3& q, const Vec3& p,
                        double tolerance) {
  ChainCheck check;
  auto fail = [&](std::string why) {
    if (check.ok) check.failure = std::move(why);
    check.ok = false;
  };
  const auto& pts = chain.points;
  if (pts.size() < 2) {
    fail("chain has fewer than two points");
    return check;
  }
  auto dist = [](const Vec3& a, const Vec3& b) {
    return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
  };
  if (dist(pts.front(), normalized(q)) > 1e-12) fail("chain does not start at q");
  if (dist(pts.back(), normalized(p)) > 1e-12) fail("chain does not end at p");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(pts[i][2] > 0)) fail("point " + std::to_string(i) + " not strictly northern");
    if (std::abs(dot(pts[i], pts[i]) - 1) > 1e-12) fail("point " + std::to_string(i) + " not unit");
  }
  for (std::size_t i = 1; i < pts.size() && check.ok; ++i) {
    const double r = std::abs(dot(pts[i], great_circle_pole(pts[i - 1])));
    check.max_residual = std::max(check.max_residual, r);
    if (!(r <= tolerance)) fail("step " + std::to_string(i) + " residual " + std::to_string(r));
  }
  return check;
}

}  // namespace qlogic
