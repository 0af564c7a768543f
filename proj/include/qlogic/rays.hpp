#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qlogic {

/// Exact value a + b*sqrt(2).
struct Surd {
  std::int64_t a = 0;
  std::int64_t b = 0;

  double value() const;
  int sign() const;
  bool operator==(const Surd&) const = default;
};

Surd operator+(Surd x, Surd y);
Surd operator-(Surd x);
Surd operator*(Surd x, Surd y);

using Vec3 = std::array<double, 3>;
using ExactVec3 = std::array<Surd, 3>;

/// One-dimensional subspace of R^3 as a unit vector whose leading nonzero
/// component is positive.
struct Ray {
  Vec3 v;
  std::optional<ExactVec3> exact;  // same direction, unnormalized
};

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kCanonicalTolerance = 1e-12;

/// Throws InvalidInput for a zero vector.
Ray canonical_ray(const Vec3& v);
Ray canonical_ray(const ExactVec3& v);

double dot(const Vec3& x, const Vec3& y);
Surd dot(const ExactVec3& x, const ExactVec3& y);

struct RaySet {
  std::vector<Ray> rays;
  double tolerance = kDefaultTolerance;
  bool exact = false;  // orthogonality decided symbolically
  std::vector<std::vector<std::size_t>> adjacency;  // sorted neighbour lists
  std::vector<std::array<std::size_t, 3>> tripods;  // sorted triples, lexicographic
  std::vector<std::string> warnings;

  std::size_t size() const { return rays.size(); }
  bool orthogonal(std::size_t i, std::size_t j) const;
};

/// Canonicalizes, merges duplicates (with a warning) and computes the
/// orthogonality graph and tripods using |u.v| <= tolerance.
RaySet load_rays(const std::vector<Vec3>& vectors, double tolerance = kDefaultTolerance);
/// Exact variant: orthogonality and duplicates are decided in Z[sqrt 2].
RaySet load_rays(const std::vector<ExactVec3>& vectors);

/// The 33 directions with components in {0, +-1, +-sqrt 2} of the Peres set.
std::vector<ExactVec3> peres_33();

}  // namespace qlogic
