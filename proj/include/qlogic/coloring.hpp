#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlogic/rays.hpp"

namespace qlogic {

enum class ColoringStatus { satisfiable, unsatisfiable, aborted };

const char* to_string(ColoringStatus status);

struct ColoringOptions {
  std::uint64_t node_budget = 50'000'000;
  bool deterministic = true;
};

struct ColoringResult {
  ColoringStatus status = ColoringStatus::aborted;
  std::optional<std::vector<int>> assignment;  // per ray, 0 or 1
  std::uint64_t nodes_explored = 0;
};

/// Values per ray: -1 unassigned, 0 or 1.
using PartialColoring = std::vector<signed char>;

/// Unit propagation: a 1 zeroes every orthogonal ray; a tripod with two
/// zeros forces its third ray to 1. Returns false on conflict.
bool propagate(const RaySet& rays, PartialColoring& values);

/// Each tripod sums to exactly 1 and no orthogonal pair is 1,1.
/// Returns a description of the first violated constraint.
std::optional<std::string> check_coloring(const RaySet& rays, const std::vector<int>& values);

/// Complete backtracking search; branches on the most constrained ray with
/// value 1 first. Budget exhaustion reports aborted.
ColoringResult search_coloring(const RaySet& rays, const ColoringOptions& options = {});
ColoringResult search_coloring(const RaySet& rays, PartialColoring start,
                               const ColoringOptions& options = {});

/// Number of admissible colorings; throws SearchBoundExceeded past the budget.
std::uint64_t count_colorings(const RaySet& rays, const ColoringOptions& options = {});

}  // namespace qlogic
