#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/formula.hpp"
#include "qlogic/orthoposet.hpp"

namespace qlogic {

/// Theory of the atom valuations s_a(p) = [a <= f(p)] over a surjection
/// f: U -> L, together with the quotient of U it induces.
struct TheoryModel {
  Orthoposet logic;
  std::vector<std::string> names;   // U, sorted
  std::vector<Element> f;           // per name
  std::vector<Element> atoms;       // atoms of L in canonical order
  std::vector<ElementSet> table;    // per atom, a bit per name
  std::vector<std::size_t> class_of;       // per name
  std::vector<std::size_t> representative; // per class, least name index
  std::vector<std::vector<bool>> class_leq;
  std::vector<std::size_t> star;    // per class
  std::vector<Element> psi;         // per class

  std::size_t class_count() const { return representative.size(); }
  std::size_t name_index(const std::string& name) const;
  /// Number of atoms, the dimension of the Boolean algebra 2^atoms.
  std::size_t lindenbaum_dim() const { return atoms.size(); }
  /// Number of pairwise distinct table rows.
  std::size_t realized_dim() const;
  /// Valuation t_{s_a} as an assignment.
  Assignment valuation(std::size_t atom) const;
};

/// Throws InvalidInput with a witness if L is not atomic, violates
/// "x <= y iff every atom below x is below y", or f is not surjective.
/// Unknown names or elements in f raise UnknownElement.
TheoryModel build_theory(const Orthoposet& l, const std::map<std::string, std::string>& f);

/// A in Th(X): true under every atom valuation.
bool in_theory(const TheoryModel& m, const Proposition& a);

/// A formula whose models over U are exactly the atom valuations, so that
/// entails({characteristic_formula(m)}, A) decides membership in Th(X).
Proposition characteristic_formula(const TheoryModel& m);

/// Lindenbaum class of A modulo Th(X): its value under each atom valuation.
ElementSet lindenbaum_class(const TheoryModel& m, const Proposition& a);

/// A formula whose Lindenbaum class is the given bit vector. Throws
/// PreconditionError if two atoms share a table row and the bits split them.
Proposition realize(const TheoryModel& m, const ElementSet& bits);

struct MalhasEmbedding {
  std::vector<ElementSet> phi;  // per element of L, a bit per atom
  bool injective = true;
  bool order_preserving = true;
  bool star_below_complement = true;
  /// Class representatives (p, q) with p -> q' in the theory although f(p) and
  /// f(q) are not orthogonal in L.
  std::vector<std::pair<std::string, std::string>> strict_witnesses;

  bool ok() const { return injective && order_preserving && star_below_complement; }
};

MalhasEmbedding malhas_embed(const TheoryModel& m);

}  // namespace qlogic
