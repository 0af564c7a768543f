#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qlogic/orthoposet.hpp"

namespace qlogic {

enum class StateRegime {
  morphism,  // bounds, order and complement preserving
  additive,  // additionally v(p v q) = v(p) + v(q) for orthogonal p, q
};

const char* to_string(StateRegime regime);

struct TwoValuedState {
  ElementSet values;  // bit e is v(e)
  StateRegime regime;

  bool operator==(const TwoValuedState& o) const { return values == o.values; }
};

struct StateFamily {
  std::vector<TwoValuedState> states;
  bool separating = false;
  bool unital = false;
};

struct StateSearchOptions {
  // Refuse carriers with more generating elements (atoms plus coatoms).
  std::size_t max_generators = 24;
};

/// Every two-valued state of the regime, sorted by value vector over the
/// canonical element order with 0 before 1. Throws SearchBoundExceeded
/// (never an empty family) when the carrier is over the bound.
StateFamily enumerate_states(const Orthoposet& l, StateRegime regime,
                             const StateSearchOptions& options = {});

bool is_separating(const Orthoposet& l, const std::vector<TwoValuedState>& states);
bool is_unital(const Orthoposet& l, const std::vector<TwoValuedState>& states);

struct StateCheck {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Lists every violated state law with witnesses. The map must be total;
/// unknown ids throw UnknownElement.
StateCheck check_state(const Orthoposet& l, const std::map<std::string, int>& values,
                       StateRegime regime);
StateCheck check_state(const Orthoposet& l, const ElementSet& values,
                       StateRegime regime);

}  // namespace qlogic
