#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace qlogic {

// Index of an element in the canonical (lexicographic by id) order.
using Element = std::size_t;
using ElementSet = boost::dynamic_bitset<>;

// Unvalidated lattice description as it comes from a file or a builder.
// Order pairs (x, y) mean x <= y; the reflexive-transitive closure is taken.
struct RawOrthoposet {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::string, std::string> complement;
  std::string zero;
  std::string one;
};

struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool mentions(const std::string& axiom) const;
  std::string describe() const;
};

struct ValidationResult;

/// Finite orthocomplemented poset. Immutable after construction; every
/// instance satisfies the orthoposet axioms (built only through
/// validate_orthoposet or the trusted builders below).
class Orthoposet {
 public:
  /// Validates and throws InvalidInput with the full report on failure.
  static Orthoposet from_raw(const RawOrthoposet& raw);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Element e) const { return names_.at(e); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(const std::string& id) const;
  /// Throws UnknownElement.
  Element at(const std::string& id) const;

  Element zero() const { return zero_; }
  Element one() const { return one_; }
  Element comp(Element e) const { return comp_.at(e); }
  bool leq(Element a, Element b) const { return up_.at(a).test(b); }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  bool orthogonal(Element a, Element b) const { return leq(a, comp(b)); }
  const ElementSet& upset(Element e) const { return up_.at(e); }
  const ElementSet& downset(Element e) const { return down_.at(e); }

  std::optional<Element> meet(Element a, Element b) const;
  std::optional<Element> join(Element a, Element b) const;
  bool is_lattice() const;

  /// The one-element algebra 0 = 1. Representable; embeddings reject it.
  bool degenerate() const { return zero_ == one_; }

  std::vector<Element> atoms() const;
  std::vector<Element> coatoms() const;
  /// Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Description with covering pairs only; from_raw(to_raw()) == *this.
  RawOrthoposet to_raw() const;

  friend bool operator==(const Orthoposet& a, const Orthoposet& b);

 private:
  friend ValidationResult validate_orthoposet(const RawOrthoposet& raw);
  Orthoposet() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> comp_;
  Element zero_ = 0;
  Element one_ = 0;
};

struct ValidationResult {
  std::optional<Orthoposet> poset;
  ValidationReport report;
};

ValidationResult validate_orthoposet(const RawOrthoposet& raw);

/// MO_n: 0, 1 and n incomparable complementary atom pairs. The pairs are
/// named p-/p+, q-/q+, r-/r+, ... (a<k>-/a<k>+ past the alphabet).
Orthoposet build_mo(std::size_t n);

/// Cartesian product with componentwise order and complement; ids "x|y".
Orthoposet product(const Orthoposet& a, const Orthoposet& b);

struct Triple {
  Element p, q, r;
};

/// A triple with p ^ (q v r) != (p ^ q) v (p ^ r), scanning triples of the
/// form (p, q, q') first and then every triple. Throws InvalidInput when
/// some meet or join is missing.
std::optional<Triple> find_distributivity_violation(const Orthoposet& l);
bool violates_distributivity(const Orthoposet& l, const Triple& t);

/// Mutually orthogonal a, b, c with p = a v b and q = a v c, if any.
std::optional<std::array<Element, 3>> co_measurable_witness(
    const Orthoposet& l, Element p, Element q);
bool co_measurable(const Orthoposet& l, Element p, Element q);

/// Order- and complement-preserving bijection a -> b (image indexed by the
/// elements of a), found by backtracking.
std::optional<std::vector<Element>> find_isomorphism(const Orthoposet& a,
                                                     const Orthoposet& b);

}  // namespace qlogic
