#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qlogic/orthoposet.hpp"
#include "qlogic/set_lattice.hpp"
#include "qlogic/states.hpp"

namespace qlogic {

// Blocks of one partition of {1..n}.
using Partition = std::vector<std::vector<int>>;

/// Orthoposet pasted from the Boolean algebras of several partitions of
/// {1..n}. Elements are the empty set, the full set and every union of cells
/// of a single partition. x <= y holds when some partition contains both
/// and x is a subset of y; the complement is the set complement.
struct PartitionLogic {
  std::size_t n = 0;
  std::vector<Partition> partitions;
  Orthoposet logic;
  std::vector<SetMask> sets;  // per element, bit i-1 for point i

  /// "{1,3}"; the empty set is "{}".
  static std::string set_name(SetMask s, std::size_t n);
};

/// Throws InvalidInput for overlapping, incomplete or out-of-range blocks.
/// labels renames elements, keyed by set_name.
PartitionLogic build_partition_logic(std::size_t n, const std::vector<Partition>& partitions,
                                     const std::map<std::string, std::string>& labels = {});

struct PartitionEmbeddingCheck {
  bool injective = true;
  bool order_preserving = true;
  std::size_t co_measurable_pairs = 0;
  /// Co-measurable pairs (p, q) where p', p v q or p ^ q is not the set operation.
  std::vector<std::pair<Element, Element>> operation_failures;

  bool ok() const { return injective && order_preserving && operation_failures.empty(); }
};

/// Checks the identity-on-sets embedding into 2^n.
PartitionEmbeddingCheck verify_partition_embedding(const PartitionLogic& pl);

/// The morphism state of each point i: v_i(x) = [i in x], in point order.
std::vector<TwoValuedState> point_states(const PartitionLogic& pl);

}  // namespace qlogic
