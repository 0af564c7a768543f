#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlogic/orthoposet.hpp"

namespace qlogic {

// Subset of a ground set of at most 64 labels; bit i is ground label i.
using SetMask = std::uint64_t;

/// Bounded lattice of subsets of a finite ground set, ordered by inclusion.
/// Meets and joins are greatest lower / least upper bounds inside the family,
/// which need not be intersections and unions.
class SetLattice {
 public:
  /// Validates: unique names and sets, contains the empty and the full set,
  /// every pair has a glb and a lub in the family. Throws InvalidInput.
  SetLattice(std::vector<std::string> ground,
             const std::map<std::string, std::vector<std::string>>& sets);

  std::size_t size() const { return masks_.size(); }
  const std::vector<std::string>& ground() const { return ground_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  SetMask mask(std::size_t i) const { return masks_.at(i); }
  std::optional<std::size_t> find(const std::string& name) const;
  std::optional<std::size_t> find(SetMask mask) const;
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  bool degenerate() const { return bottom_ == top_; }

  bool leq(std::size_t a, std::size_t b) const {
    return (masks_[a] & ~masks_[b]) == 0;
  }
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  /// Elements covering `a`, in canonical order.
  std::vector<std::size_t> upper_covers(std::size_t a) const;

  /// Index of the set complement of element i, when it is in the family.
  std::optional<std::size_t> complement(std::size_t i) const;
  std::string format_set(SetMask mask) const;

  /// Orthoposet under set complement; throws InvalidInput when the family
  /// is not closed under complement or is too large.
  Orthoposet to_orthoposet() const;

 private:
  friend SetLattice powerset(std::vector<std::string> ground,
                             std::size_t bound);
  SetLattice() = default;
  void index_elements();

  std::vector<std::string> ground_;
  std::vector<std::string> names_;
  std::vector<SetMask> masks_;
  std::map<SetMask, std::size_t> by_mask_;
  std::map<std::string, std::size_t> by_name_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Powerset of the given ground labels; element ids in set notation "{a,b}".
SetLattice powerset(std::vector<std::string> ground, std::size_t bound = 20);

/// Powerset of {a, b, c, ...} with n labels. The n = 0 algebra is degenerate.
SetLattice build_boolean(std::size_t n, std::size_t bound = 20);

}  // namespace qlogic
