#include "qlogic/stone.hpp"

#include <algorithm>

#include "qlogic/error.hpp"

namespace qlogic {

bool is_ideal(const Orthoposet& l, const ElementSet& members) {
  if (members.none()) return false;
  for (auto p = members.find_first(); p != ElementSet::npos; p = members.find_next(p)) {
    if (members.test(l.comp(p))) return false;
    if (!l.downset(p).is_subset_of(members)) return false;
  }
  return true;
}

bool is_maximal_ideal(const Orthoposet& l, const Ideal& ideal) {
  if (!is_ideal(l, ideal.members)) return false;
  for (Element r = 0; r < l.size(); ++r) {
    if (!ideal.contains(r) && !ideal.contains(l.comp(r))) return false;
  }
  return true;
}

Ideal principal_ideal(const Orthoposet& l, Element r) { return {l.downset(r)}; }

bool canonical_less(const Orthoposet&, const Ideal& a, const Ideal& b) {
  // Element indices follow the lexicographic id order.
  auto x = a.members.find_first();
  auto y = b.members.find_first();
  while (x != ElementSet::npos && y != ElementSet::npos) {
    if (x != y) return x < y;
    x = a.members.find_next(x);
    y = b.members.find_next(y);
  }
  return x == ElementSet::npos && y != ElementSet::npos;
}

std::vector<Ideal> enumerate_maximal_ideals(const Orthoposet& l,
                                            const StateSearchOptions& options) {
  if (l.degenerate()) throw PreconditionError("degenerate algebra 0 = 1");
  const auto generators = l.atoms().size() + l.coatoms().size();
  if (generators > options.max_generators) {
    throw SearchBoundExceeded("maximal-ideal search refused: " +
                              std::to_string(generators) +
                              " generating elements exceed bound " +
                              std::to_string(options.max_generators));
  }

  // One decision per complement pair: which side the ideal holds.
  std::vector<Element> pairs;
  for (Element e = 0; e < l.size(); ++e) {
    if (e < l.comp(e) && e != l.zero() && e != l.one()) pairs.push_back(e);
  }
  std::vector<Ideal> found;
  ElementSet in(l.size()), out(l.size());
  in.set(l.zero());
  out.set(l.one());

  auto choose = [&](auto&& self, std::size_t k) -> void {
    if (k == pairs.size()) {
      Ideal ideal{in};
      if (is_maximal_ideal(l, ideal)) found.push_back(std::move(ideal));
      return;
    }
    const Element r = pairs[k];
    for (Element x : {r, l.comp(r)}) {
      const Element c = l.comp(x);
      if ((l.downset(x) & out).any() || (l.upset(c) & in).any()) continue;
      in.set(x);
      out.set(c);
      self(self, k + 1);
      in.reset(x);
      out.reset(c);
    }
  };
  choose(choose, 0);

  std::sort(found.begin(), found.end(),
            [&](const Ideal& a, const Ideal& b) { return canonical_less(l, a, b); });
  return found;
}

Ideal extend_ideal(const Orthoposet& l, const Ideal& ideal, Element r) {
  if (ideal.contains(r) || ideal.contains(l.comp(r))) {
    throw PreconditionError("extend_ideal needs " + l.name(r) + " and its complement " +
                            l.name(l.comp(r)) + " outside the ideal");
  }
  Ideal extended{ideal.members | l.downset(r)};
  if (!is_ideal(l, extended.members)) {
    throw Error("extension by " + l.name(r) + " is not an ideal");
  }
  return extended;
}

Ideal separating_ideal(const Orthoposet& l, Element p, Element q) {
  if (l.leq(p, q)) {
    throw PreconditionError(l.name(p) + " <= " + l.name(q) +
                            ": no ideal contains the latter without the former");
  }
  Ideal ideal = principal_ideal(l, q);
  for (;;) {
    std::optional<Element> open;
    for (Element r = 0; r < l.size() && !open; ++r) {
      if (!ideal.contains(r) && !ideal.contains(l.comp(r))) open = r;
    }
    if (!open) break;
    // p != 0, so p sits below at most one of r, r'.
    const Element r = l.leq(p, *open) ? l.comp(*open) : *open;
    ideal = extend_ideal(l, ideal, r);
  }
  if (!is_maximal_ideal(l, ideal) || ideal.contains(p) || !ideal.contains(q)) {
    throw Error("greedy extension did not reach a separating maximal ideal");
  }
  return ideal;
}

std::vector<Ideal> separating_ideals_by_enumeration(const Orthoposet& l, Element p,
                                                    Element q) {
  std::vector<Ideal> result;
  for (auto& ideal : enumerate_maximal_ideals(l)) {
    if (ideal.contains(q) && !ideal.contains(p)) result.push_back(std::move(ideal));
  }
  return result;
}

StoneEmbedding stone_embed(const Orthoposet& l, const StateSearchOptions& options) {
  StoneEmbedding e;
  e.ideals = enumerate_maximal_ideals(l, options);
  e.image.assign(l.size(), ElementSet(e.ideals.size()));
  for (Element p = 0; p < l.size(); ++p) {
    for (std::size_t i = 0; i < e.ideals.size(); ++i) {
      e.image[p][i] = !e.ideals[i].contains(p);
    }
  }
  return e;
}

EmbeddingCheck verify_stone(const Orthoposet& l, const StoneEmbedding& e) {
  EmbeddingCheck check;
  for (Element p = 0; p < l.size(); ++p) {
    if (e.image[l.comp(p)] != ~e.image[p]) {
      check.complement_preserving = false;
      check.failures.emplace_back(p, l.comp(p));
    }
    for (Element q = 0; q < l.size(); ++q) {
      if (p != q && e.image[p] == e.image[q]) {
        check.injective = false;
        check.failures.emplace_back(p, q);
      }
      if (l.leq(p, q) && !e.image[p].is_subset_of(e.image[q])) {
        check.order_preserving = false;
        check.failures.emplace_back(p, q);
      }
    }
  }
  return check;
}

std::optional<std::pair<Element, Element>> find_join_failure(const Orthoposet& l,
                                                             const StoneEmbedding& e) {
  for (Element p = 0; p < l.size(); ++p) {
    for (Element q = p + 1; q < l.size(); ++q) {
      auto j = l.join(p, q);
      if (j && e.image[*j] != (e.image[p] | e.image[q])) return std::pair(p, q);
    }
  }
  return std::nullopt;
}

Ideal kernel_ideal(const TwoValuedState& state) { return {~state.values}; }

}  // namespace qlogic
