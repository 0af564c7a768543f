#include "qlogic/states.hpp"

#include <algorithm>

#include "qlogic/error.hpp"

namespace qlogic {

const char* to_string(StateRegime regime) {
  return regime == StateRegime::morphism ? "morphism" : "additive";
}

namespace {

struct OrthogonalJoin {
  Element p, q, join;
};

// Depth-first enumeration over complement pairs with forward propagation.
class StateSearch {
 public:
  StateSearch(const Orthoposet& l, StateRegime regime) : l_(l), regime_(regime) {
    if (regime_ == StateRegime::additive) {
      for (Element p = 0; p < l.size(); ++p) {
        for (Element q = p + 1; q < l.size(); ++q) {
          if (!l.orthogonal(p, q)) continue;
          if (auto j = l.join(p, q)) joins_.push_back({p, q, *j});
        }
      }
    }
  }

  std::vector<TwoValuedState> run() {
    std::vector<signed char> values(l_.size(), -1);
    if (assign(values, l_.zero(), 0) && assign(values, l_.one(), 1) &&
        settle(values)) {
      descend(values);
    }
    return std::move(found_);
  }

 private:
  // Sets e := bit and everything it forces through order and complement.
  bool assign(std::vector<signed char>& v, Element e, int bit) const {
    std::vector<std::pair<Element, int>> pending{{e, bit}};
    while (!pending.empty()) {
      auto [x, b] = pending.back();
      pending.pop_back();
      if (v[x] == b) continue;
      if (v[x] != -1) return false;
      v[x] = static_cast<signed char>(b);
      pending.emplace_back(l_.comp(x), 1 - b);
      const auto& forced = b == 1 ? l_.upset(x) : l_.downset(x);
      for (auto y = forced.find_first(); y != ElementSet::npos;
           y = forced.find_next(y)) {
        if (v[y] != b) pending.emplace_back(y, b);
      }
    }
    return true;
  }

  // Additivity constraints to fixpoint.
  bool settle(std::vector<signed char>& v) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : joins_) {
        const int p = v[c.p], q = v[c.q], j = v[c.join];
        if (p == 1 && q == 1) return false;
        if (j == 1 && p == 0 && q == -1) {
          if (!assign(v, c.q, 1)) return false;
          changed = true;
        } else if (j == 1 && q == 0 && p == -1) {
          if (!assign(v, c.p, 1)) return false;
          changed = true;
        } else if (j == 1 && p == 0 && q == 0) {
          return false;
        } else if (j == 0 && (p == 1 || q == 1)) {
          return false;
        } else if (j == -1 && p != -1 && q != -1) {
          if (!assign(v, c.join, p + q)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  void descend(std::vector<signed char>& v) {
    auto open = std::find(v.begin(), v.end(), -1);
    if (open == v.end()) {
      ElementSet bits(v.size());
      for (Element e = 0; e < v.size(); ++e) bits[e] = v[e] == 1;
      found_.push_back({bits, regime_});
      return;
    }
    const Element e = static_cast<Element>(open - v.begin());
    for (int bit : {1, 0}) {
      auto next = v;
      if (assign(next, e, bit) && settle(next)) descend(next);
    }
  }

  const Orthoposet& l_;
  StateRegime regime_;
  std::vector<OrthogonalJoin> joins_;
  std::vector<TwoValuedState> found_;
};

}  // namespace

bool is_separating(const Orthoposet& l, const std::vector<TwoValuedState>& states) {
  for (Element p = 0; p < l.size(); ++p) {
    for (Element q = p + 1; q < l.size(); ++q) {
      const bool split = std::any_of(states.begin(), states.end(), [&](const auto& s) {
        return s.values[p] != s.values[q];
      });
      if (!split) return false;
    }
  }
  return true;
}

bool is_unital(const Orthoposet& l, const std::vector<TwoValuedState>& states) {
  for (Element p = 0; p < l.size(); ++p) {
    if (p == l.zero()) continue;
    const bool hit = std::any_of(states.begin(), states.end(),
                                 [&](const auto& s) { return s.values[p]; });
    if (!hit) return false;
  }
  return true;
}

StateFamily enumerate_states(const Orthoposet& l, StateRegime regime,
                             const StateSearchOptions& options) {
  if (l.degenerate()) {
    throw PreconditionError("degenerate algebra 0 = 1 carries no two-valued state");
  }
  const auto generators = l.atoms().size() + l.coatoms().size();
  if (generators > options.max_generators) {
    throw SearchBoundExceeded("state search refused: " + std::to_string(generators) +
                              " generating elements exceed bound " +
                              std::to_string(options.max_generators));
  }
  StateFamily family;
  family.states = StateSearch(l, regime).run();
  std::sort(family.states.begin(), family.states.end(), [](const auto& a, const auto& b) {
    for (std::size_t e = 0; e < a.values.size(); ++e) {
      if (a.values[e] != b.values[e]) return a.values[e] < b.values[e];
    }
    return false;
  });
  family.separating = is_separating(l, family.states);
  family.unital = is_unital(l, family.states);
  return family;
}

StateCheck check_state(const Orthoposet& l, const ElementSet& v, StateRegime regime) {
  StateCheck check;
  auto& out = check.violations;
  auto nm = [&](Element e) { return l.name(e); };
  if (v[l.zero()]) out.push_back({"v(0) != 0", {nm(l.zero())}});
  if (!v[l.one()]) out.push_back({"v(1) != 1", {nm(l.one())}});
  for (Element p = 0; p < l.size(); ++p) {
    const Element c = l.comp(p);
    if (p < c && v[p] == v[c]) out.push_back({"v(p') != 1 - v(p)", {nm(p), nm(c)}});
  }
  for (Element p = 0; p < l.size(); ++p) {
    for (Element q = 0; q < l.size(); ++q) {
      if (l.lt(p, q) && v[p] && !v[q]) out.push_back({"not monotone", {nm(p), nm(q)}});
    }
  }
  if (regime == StateRegime::additive) {
    for (Element p = 0; p < l.size(); ++p) {
      for (Element q = p + 1; q < l.size(); ++q) {
        if (!l.orthogonal(p, q)) continue;
        auto j = l.join(p, q);
        if (j && int(v[*j]) != int(v[p]) + int(v[q])) {
          out.push_back({"not additive", {nm(p), nm(q), nm(*j)}});
        }
      }
    }
  }
  return check;
}

StateCheck check_state(const Orthoposet& l, const std::map<std::string, int>& values,
                       StateRegime regime) {
  ElementSet v(l.size());
  ElementSet seen(l.size());
  for (const auto& [id, bit] : values) {
    const Element e = l.at(id);
    v[e] = bit != 0;
    seen.set(e);
  }
  if (!seen.all()) {
    StateCheck check;
    for (Element e = 0; e < l.size(); ++e) {
      if (!seen[e]) check.violations.push_back({"map not total", {l.name(e)}});
    }
    return check;
  }
  return check_state(l, v, regime);
}

}  // namespace qlogic
