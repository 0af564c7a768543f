#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qlogic/orthoposet.hpp"
#include "qlogic/states.hpp"

namespace qlogic {

/// Nonempty, downward closed, never holding both p and p'.
struct Ideal {
  ElementSet members;

  bool contains(Element e) const { return members.test(e); }
  bool operator==(const Ideal& o) const { return members == o.members; }
};

bool is_ideal(const Orthoposet& l, const ElementSet& members);
/// Maximal iff for every r, r not in I implies r' in I.
bool is_maximal_ideal(const Orthoposet& l, const Ideal& ideal);
Ideal principal_ideal(const Orthoposet& l, Element r);
/// Lexicographic on the sorted member id lists.
bool canonical_less(const Orthoposet& l, const Ideal& a, const Ideal& b);

/// All maximal ideals in canonical order.
std::vector<Ideal> enumerate_maximal_ideals(const Orthoposet& l,
                                            const StateSearchOptions& options = {});

/// I united with the principal ideal of r. Requires r and r' outside I.
Ideal extend_ideal(const Orthoposet& l, const Ideal& ideal, Element r);

/// Maximal ideal containing q but not p, by greedy extension from (q).
/// Requires p not below q.
Ideal separating_ideal(const Orthoposet& l, Element p, Element q);

/// Maximal elements of the family of ideals containing q and avoiding p,
/// taken from the full maximal-ideal list.
std::vector<Ideal> separating_ideals_by_enumeration(const Orthoposet& l, Element p,
                                                    Element q);

struct StoneEmbedding {
  std::vector<Ideal> ideals;
  std::vector<ElementSet> image;  // per element, subset of ideal indices

  std::size_t dimension() const { return ideals.size(); }
};

StoneEmbedding stone_embed(const Orthoposet& l, const StateSearchOptions& options = {});

struct EmbeddingCheck {
  bool injective = true;
  bool order_preserving = true;
  bool complement_preserving = true;
  std::vector<std::pair<Element, Element>> failures;

  bool ok() const { return injective && order_preserving && complement_preserving; }
};

/// Exhaustive check over all pairs of the three embedding claims.
EmbeddingCheck verify_stone(const Orthoposet& l, const StoneEmbedding& e);

/// A pair whose join exists and whose image join is not the union of images.
std::optional<std::pair<Element, Element>> find_join_failure(const Orthoposet& l,
                                                             const StoneEmbedding& e);

/// The zero-set v^{-1}(0) of a morphism state.
Ideal kernel_ideal(const TwoValuedState& state);

}  // namespace qlogic
