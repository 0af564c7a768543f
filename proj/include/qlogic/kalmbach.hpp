#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/orthoposet.hpp"
#include "qlogic/set_lattice.hpp"

namespace qlogic {

// Element indices of a SetLattice, strictly increasing from bottom to top.
using Chain = std::vector<std::size_t>;

/// All maximal chains from bottom to top, lexicographic by element index.
std::vector<Chain> maximal_chains(const SetLattice& l);

/// Boolean algebra generated by one maximal chain. Atom n carries the set
/// difference a_n \ a_{n-1}; block elements are bit masks over the atoms.
struct ChainBlock {
  Chain chain;
  std::vector<SetMask> atoms;

  std::size_t dimension() const { return atoms.size(); }
  std::uint64_t full() const { return (std::uint64_t{1} << atoms.size()) - 1; }
  /// Block image of chain position k: atoms 1..k joined.
  std::uint64_t image(std::size_t k) const { return (std::uint64_t{1} << k) - 1; }
};

/// Throws InvalidInput unless the chain is strictly increasing from bottom
/// to top.
ChainBlock chain_block(const SetLattice& l, const Chain& chain);

struct BlockNode {
  std::size_t block;
  std::uint64_t atoms;
};

/// K(L): chain blocks pasted by the congruence generated from shared chain
/// elements and closed under in-block complements and joins.
class PastedLattice {
 public:
  const std::vector<ChainBlock>& blocks() const { return blocks_; }
  std::size_t size() const { return logic_.size(); }
  /// Classes as an orthoposet; element ids are the class representatives.
  const Orthoposet& logic() const { return logic_; }
  const std::vector<BlockNode>& members(Element cls) const { return classes_.at(cls); }
  Element class_of(BlockNode node) const;
  /// Class of an element of the source lattice.
  Element embed(std::size_t element) const { return embed_.at(element); }
  /// Token name of a block atom: A1, A2, ... for block 0, B1, ... for block 1.
  static std::string atom_token(std::size_t block, std::size_t atom);

 private:
  friend PastedLattice kalmbach_embed(const SetLattice& l);
  explicit PastedLattice(Orthoposet logic) : logic_(std::move(logic)) {}

  std::vector<ChainBlock> blocks_;
  std::vector<std::size_t> offsets_;
  std::vector<Element> node_class_;
  std::vector<std::vector<BlockNode>> classes_;
  std::vector<Element> embed_;
  Orthoposet logic_;
};

/// Throws InvalidInput if the congruence collapses two elements of one
/// block (in particular 0 ~ 1).
PastedLattice kalmbach_embed(const SetLattice& l);

struct KalmbachCheck {
  bool injective = true;
  bool well_defined = true;
  bool blocks_embedded = true;
  std::vector<std::pair<std::size_t, std::size_t>> meet_failures;
  std::vector<std::pair<std::size_t, std::size_t>> join_failures;
  std::size_t missing_bounds = 0;  // pairs whose class-level bound is absent

  bool ok() const {
    return injective && well_defined && blocks_embedded && meet_failures.empty() &&
           join_failures.empty();
  }
};

/// Exhaustive over all pairs of the source lattice.
KalmbachCheck verify_kalmbach(const SetLattice& l, const PastedLattice& k);

/// An element x with a set complement in L such that embed(x') differs from
/// the complement of embed(x) in K(L).
std::optional<std::size_t> verify_complement_failure(const SetLattice& l,
                                                     const PastedLattice& k);

/// True when the class meets every block, i.e. it is common to all blocks.
bool shared_by_all_blocks(const PastedLattice& k, Element cls);

}  // namespace qlogic
