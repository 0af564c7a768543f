#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

/// Formula over simple propositions with negation and implication only.
/// Derived connectives are expanded at construction.
class Proposition {
 public:
  enum class Kind { simple, negation, implication };

  static Proposition simple(std::string name);
  static Proposition negation(Proposition a);
  static Proposition implication(Proposition a, Proposition b);

  Kind kind() const { return node_->kind; }
  /// Leaf name; empty for compound formulas.
  const std::string& name() const { return node_->name; }
  const Proposition& operand() const { return node_->children.at(0); }
  const Proposition& left() const { return node_->children.at(0); }
  const Proposition& right() const { return node_->children.at(1); }

  /// Structural equality: A'' and A differ.
  bool operator==(const Proposition& o) const;

  /// Leaf names, sorted and unique.
  std::vector<std::string> leaves() const;
  std::size_t depth() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Proposition> children;
  };
  explicit Proposition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A or B := A' -> B
Proposition disjunction(Proposition a, Proposition b);
/// A and B := (A -> B')'
Proposition conjunction(Proposition a, Proposition b);
/// A iff B := (A -> B) and (B -> A)
Proposition equivalence(Proposition a, Proposition b);

/// Grammar, loosest first: iff, -> (right associative), or, and, postfix '.
/// Identifiers are [A-Za-z0-9_] runs, optionally ending in + or -.
/// With a nonempty vocabulary, names outside it raise ParseError.
Proposition parse(std::string_view text, const std::vector<std::string>& vocabulary = {});

/// Prints in {', ->} form; parse(to_string(a)) == a.
std::string to_string(const Proposition& a);

using Assignment = std::map<std::string, bool>;

/// Throws UnknownElement for a leaf missing from t.
bool eval(const Assignment& t, const Proposition& a);

/// Formula compiled against a fixed name list; evaluates on bit masks where
/// bit i carries the value of names[i].
class CompiledProposition {
 public:
  CompiledProposition(const Proposition& a, const std::vector<std::string>& names);
  bool operator()(std::uint64_t bits) const;

 private:
  enum : std::int32_t { kNeg = -1, kImpl = -2 };
  std::vector<std::int32_t> code_;  // postfix; non-negative entries are leaves
  std::size_t height_ = 0;          // maximal evaluation stack depth
};

inline constexpr std::size_t kDefaultNameBound = 20;

/// K |= A by enumeration of all assignments to the names occurring in K and A.
/// Throws SearchBoundExceeded beyond name_bound names.
bool entails(const std::vector<Proposition>& k, const Proposition& a,
             std::size_t name_bound = kDefaultNameBound);

/// Uniform random formula of bounded depth over the given names.
Proposition random_proposition(const std::vector<std::string>& names, std::size_t max_depth,
                               std::mt19937_64& rng);

struct ConReport {
  bool extensive = true;
  bool monotone = true;
  bool idempotent = true;
  bool finitary = true;
  std::vector<std::string> failures;

  bool ok() const { return extensive && monotone && idempotent && finitary; }
};

/// Checks the closure-operator laws of Con on K against sampled formulas.
ConReport con_properties_check(const std::vector<Proposition>& k,
                               const std::vector<std::string>& names, std::mt19937_64& rng,
                               std::size_t samples = 50);

}  // namespace qlogic
