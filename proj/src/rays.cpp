#include "qlogic/rays.hpp"

#include <algorithm>
#include <cmath>

#include "qlogic/error.hpp"

namespace qlogic {

double Surd::value() const { return double(a) + double(b) * std::sqrt(2.0); }

int Surd::sign() const {
  auto sgn = [](std::int64_t x) { return (x > 0) - (x < 0); };
  if (sgn(a) * sgn(b) >= 0) return sgn(a) != 0 ? sgn(a) : sgn(b);
  // Opposite signs: compare a^2 with 2 b^2.
  const auto lhs = a * a, rhs = 2 * b * b;
  return lhs == rhs ? 0 : (lhs > rhs ? sgn(a) : sgn(b));
}

Surd operator+(Surd x, Surd y) { return {x.a + y.a, x.b + y.b}; }
Surd operator-(Surd x) { return {-x.a, -x.b}; }
Surd operator*(Surd x, Surd y) { return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a}; }

double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Surd dot(const ExactVec3& x, const ExactVec3& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

Ray canonical_ray(const Vec3& v) {
  const double norm = std::sqrt(dot(v, v));
  if (!(norm > 0) || !std::isfinite(norm)) throw InvalidInput("zero or non-finite ray vector");
  Vec3 u{v[0] / norm, v[1] / norm, v[2] / norm};
  for (double c : u) {
    if (std::abs(c) > kCanonicalTolerance) {
      if (c < 0) {
        for (auto& x : u) x = -x;
      }
      break;
    }
  }
  for (auto& x : u) {
    if (x == 0) x = 0;  // drop negative zero
  }
  return {u, std::nullopt};
}

Ray canonical_ray(const ExactVec3& v) {
  ExactVec3 e = v;
  for (const auto& c : e) {
    if (c.sign() != 0) {
      if (c.sign() < 0) {
        for (auto& x : e) x = -x;
      }
      break;
    }
  }
  if (std::all_of(e.begin(), e.end(), [](const Surd& s) { return s.sign() == 0; })) {
    throw InvalidInput("zero ray vector");
  }
  Ray r = canonical_ray(Vec3{e[0].value(), e[1].value(), e[2].value()});
  // The exact sign fixes the orientation when the float leading entry is tiny.
  for (std::size_t i = 0; i < 3; ++i) {
    if (e[i].sign() != 0) {
      if ((r.v[i] < 0) != (e[i].sign() < 0)) {
        for (auto& x : r.v) x = -x;
      }
      break;
    }
  }
  r.exact = e;
  return r;
}

bool RaySet::orthogonal(std::size_t i, std::size_t j) const {
  return std::binary_search(adjacency[i].begin(), adjacency[i].end(), j);
}

namespace {

bool parallel(const ExactVec3& x, const ExactVec3& y) {
  auto cross = [&](int i, int j) { return x[i] * y[j] + -(x[j] * y[i]); };
  return cross(1, 2).sign() == 0 && cross(2, 0).sign() == 0 && cross(0, 1).sign() == 0;
}

template <typename Orth>
void build_graph(RaySet& set, Orth&& orth) {
  const auto n = set.rays.size();
  set.adjacency.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (orth(set.rays[i], set.rays[j])) {
        set.adjacency[i].push_back(j);
        set.adjacency[j].push_back(i);
      }
    }
  }
  for (auto& list : set.adjacency) std::sort(list.begin(), list.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : set.adjacency[i]) {
      if (j <= i) continue;
      for (auto k : set.adjacency[j]) {
        if (k > j && set.orthogonal(i, k)) set.tripods.push_back({i, j, k});
      }
    }
  }
}

}  // namespace

RaySet load_rays(const std::vector<Vec3>& vectors, double tolerance) {
  RaySet set;
  set.tolerance = tolerance;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Ray r = canonical_ray(vectors[i]);
    auto same = std::find_if(set.rays.begin(), set.rays.end(), [&](const Ray& o) {
      for (int c = 0; c < 3; ++c) {
        if (std::abs(o.v[c] - r.v[c]) > kCanonicalTolerance) return false;
      }
      return true;
    });
    if (same != set.rays.end()) {
      set.warnings.push_back("ray " + std::to_string(i + 1) + " duplicates ray " +
                             std::to_string(same - set.rays.begin() + 1) + "; merged");
      continue;
    }
    set.rays.push_back(r);
  }
  build_graph(set, [&](const Ray& a, const Ray& b) { return std::abs(dot(a.v, b.v)) <= tolerance; });
  return set;
}

RaySet load_rays(const std::vector<ExactVec3>& vectors) {
  RaySet set;
  set.exact = true;
  set.tolerance = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Ray r = canonical_ray(vectors[i]);
    auto same = std::find_if(set.rays.begin(), set.rays.end(),
                             [&](const Ray& o) { return parallel(*o.exact, *r.exact); });
    if (same != set.rays.end()) {
      set.warnings.push_back("ray " + std::to_string(i + 1) + " duplicates ray " +
                             std::to_string(same - set.rays.begin() + 1) + "; merged");
      continue;
    }
    set.rays.push_back(r);
  }
  build_graph(set, [](const Ray& a, const Ray& b) { return dot(*a.exact, *b.exact).sign() == 0; });
  return set;
}

std::vector<ExactVec3> peres_33() {
  const Surd zero{0, 0}, one{1, 0}, r2{0, 1};
  std::vector<ExactVec3> out;
  auto perms = [&](ExactVec3 v) {
    std::sort(v.begin(), v.end(), [](const Surd& x, const Surd& y) {
      return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    do {
      out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end(), [](const Surd& x, const Surd& y) {
      return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    }));
  };
  perms({one, zero, zero});
  perms({one, one, zero});
  perms({one, -one, zero});
  perms({one, r2, zero});
  perms({one, -r2, zero});
  perms({one, one, r2});
  perms({one, -one, r2});
  perms({-one, -one, r2});
  // Antipodal copies collapse under canonicalization.
  std::vector<ExactVec3> unique;
  for (const auto& v : out) {
    const auto c = *canonical_ray(v).exact;
    if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
  }
  return unique;
}

}  // namespace qlogic
