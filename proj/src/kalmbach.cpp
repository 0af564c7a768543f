#include "qlogic/kalmbach.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

constexpr std::size_t kMaxBlockDimension = 20;
constexpr std::size_t kMaxNodes = std::size_t{1} << 22;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller index as root so roots are canonical representatives.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<Chain> maximal_chains(const SetLattice& l) {
  std::vector<std::vector<std::size_t>> covers(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) covers[a] = l.upper_covers(a);
  std::vector<Chain> chains;
  Chain current{l.bottom()};
  auto walk = [&](auto&& self) -> void {
    const auto last = current.back();
    if (last == l.top()) {
      chains.push_back(current);
      return;
    }
    for (auto next : covers[last]) {
      current.push_back(next);
      self(self);
      current.pop_back();
    }
  };
  if (l.degenerate()) return {current};
  walk(walk);
  std::sort(chains.begin(), chains.end());
  return chains;
}

ChainBlock chain_block(const SetLattice& l, const Chain& chain) {
  if (chain.size() < 2 || chain.front() != l.bottom() || chain.back() != l.top()) {
    throw InvalidInput("chain must run from the bottom to the top element");
  }
  if (chain.size() - 1 > kMaxBlockDimension) {
    throw SearchBoundExceeded("chain longer than " + std::to_string(kMaxBlockDimension));
  }
  ChainBlock block{chain, {}};
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const SetMask lower = l.mask(chain[k - 1]);
    const SetMask upper = l.mask(chain[k]);
    if ((lower & ~upper) != 0 || lower == upper) {
      throw InvalidInput("not a strictly increasing chain at '" + l.name(chain[k]) + "'");
    }
    // a_n ^ (a_{n-1})'
    block.atoms.push_back(upper & ~lower);
  }
  return block;
}

std::string PastedLattice::atom_token(std::size_t block, std::size_t atom) {
  const std::string prefix =
      block < 26 ? std::string(1, char('A' + block)) : "X" + std::to_string(block) + "_";
  return prefix + std::to_string(atom + 1);
}

Element PastedLattice::class_of(BlockNode node) const {
  return node_class_.at(offsets_.at(node.block) + node.atoms);
}

PastedLattice kalmbach_embed(const SetLattice& l) {
  if (l.degenerate()) throw PreconditionError("degenerate lattice 0 = 1");
  std::vector<ChainBlock> blocks;
  for (const auto& chain : maximal_chains(l)) blocks.push_back(chain_block(l, chain));

  std::vector<std::size_t> offsets;
  std::size_t nodes = 0;
  for (const auto& b : blocks) {
    offsets.push_back(nodes);
    nodes += std::size_t{1} << b.dimension();
    if (nodes > kMaxNodes) throw SearchBoundExceeded("pasting too large");
  }
  auto node = [&](std::size_t b, std::uint64_t atoms) { return offsets[b] + atoms; };
  auto block_of = [&](std::size_t n) {
    return static_cast<std::size_t>(
        std::upper_bound(offsets.begin(), offsets.end(), n) - offsets.begin() - 1);
  };

  UnionFind uf(nodes);
  // Shared chain elements: every block image of x is identified.
  std::vector<std::vector<std::size_t>> images(l.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& chain = blocks[b].chain;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      images[chain[k]].push_back(node(b, blocks[b].image(k)));
    }
  }
  for (const auto& same : images) {
    for (std::size_t i = 1; i < same.size(); ++i) uf.unite(same[0], same[i]);
  }

  auto complement_node = [&](std::size_t n) {
    const auto b = block_of(n);
    return node(b, blocks[b].full() ^ (n - offsets[b]));
  };

  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t n = 0; n < nodes; ++n) groups[uf.find(n)].push_back(n);

    // In-block complements of identified nodes are identified.
    for (const auto& [root, members] : groups) {
      for (std::size_t i = 1; i < members.size(); ++i) {
        changed |= uf.unite(complement_node(members[0]), complement_node(members[i]));
      }
    }
    // Joins of identified pairs, per pair of blocks.
    std::map<std::pair<std::size_t, std::size_t>,
             std::vector<std::pair<std::uint64_t, std::uint64_t>>>
        identified;
    for (const auto& [root, members] : groups) {
      for (auto u : members) {
        for (auto w : members) {
          const auto bu = block_of(u), bw = block_of(w);
          if (bu < bw) identified[{bu, bw}].emplace_back(u - offsets[bu], w - offsets[bw]);
        }
      }
    }
    for (const auto& [bs, list] : identified) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
          changed |= uf.unite(node(bs.first, list[i].first | list[j].first),
                              node(bs.second, list[i].second | list[j].second));
        }
      }
    }
  }

  // Collapse check: two nodes of one block in one class.
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t n = 0; n < nodes; ++n) groups[uf.find(n)].push_back(n);
  for (const auto& [root, members] : groups) {
    std::set<std::size_t> seen;
    for (auto n : members) {
      if (!seen.insert(block_of(n)).second) {
        throw InvalidInput("congruence collapses block " + std::to_string(block_of(n)) +
                           (root == node(0, 0) ? " (0 ~ 1)" : ""));
      }
    }
  }

  auto class_name = [&](std::size_t root) {
    const auto b = block_of(root);
    const auto atoms = root - offsets[b];
    if (root == uf.find(node(0, 0))) return std::string("0");
    if (root == uf.find(node(0, blocks[0].full()))) return std::string("1");
    std::string out = "{";
    for (std::size_t a = 0; a < blocks[b].dimension(); ++a) {
      if (atoms >> a & 1) {
        out += (out.size() > 1 ? "," : "") + PastedLattice::atom_token(b, a);
      }
    }
    return out + "}";
  };

  RawOrthoposet raw;
  std::map<std::size_t, std::string> root_name;
  for (const auto& [root, members] : groups) {
    root_name[root] = class_name(root);
    raw.elements.push_back(root_name[root]);
    raw.complement[root_name[root]] = class_name(uf.find(complement_node(root)));
  }
  std::set<std::pair<std::string, std::string>> order;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::uint64_t s = 0; s <= blocks[b].full(); ++s) {
      for (std::size_t a = 0; a < blocks[b].dimension(); ++a) {
        if (s >> a & 1) continue;
        order.emplace(root_name[uf.find(node(b, s))],
                      root_name[uf.find(node(b, s | (std::uint64_t{1} << a)))]);
      }
    }
  }
  raw.order.assign(order.begin(), order.end());
  raw.zero = "0";
  raw.one = "1";

  auto validated = validate_orthoposet(raw);
  if (!validated.poset) {
    throw InvalidInput("pasted blocks do not form an orthoposet:\n" +
                       validated.report.describe());
  }
  PastedLattice k(std::move(*validated.poset));
  k.blocks_ = std::move(blocks);
  k.offsets_ = offsets;
  k.node_class_.resize(nodes);
  k.classes_.resize(k.logic_.size());
  for (std::size_t n = 0; n < nodes; ++n) {
    const Element cls = k.logic_.at(root_name[uf.find(n)]);
    k.node_class_[n] = cls;
    k.classes_[cls].push_back({block_of(n), n - k.offsets_[block_of(n)]});
  }
  k.embed_.resize(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) k.embed_[x] = k.node_class_[images[x].at(0)];
  return k;
}

KalmbachCheck verify_kalmbach(const SetLattice& l, const PastedLattice& k) {
  KalmbachCheck check;
  const auto& blocks = k.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& chain = blocks[b].chain;
    for (std::size_t pos = 0; pos < chain.size(); ++pos) {
      if (k.class_of({b, blocks[b].image(pos)}) != k.embed(chain[pos])) {
        check.well_defined = false;
      }
    }
    const auto full = blocks[b].full();
    for (std::uint64_t s = 0; s <= full; ++s) {
      for (std::uint64_t t = 0; t <= full; ++t) {
        const Element cs = k.class_of({b, s}), ct = k.class_of({b, t});
        if ((s == t) != (cs == ct) || k.logic().leq(cs, ct) != ((s & ~t) == 0)) {
          check.blocks_embedded = false;
        }
      }
    }
  }
  const auto& kl = k.logic();
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      if (x != y && k.embed(x) == k.embed(y)) check.injective = false;
      if (y < x) continue;
      const auto m = kl.meet(k.embed(x), k.embed(y));
      const auto j = kl.join(k.embed(x), k.embed(y));
      if (!m) ++check.missing_bounds;
      else if (*m != k.embed(l.meet(x, y))) check.meet_failures.emplace_back(x, y);
      if (!j) ++check.missing_bounds;
      else if (*j != k.embed(l.join(x, y))) check.join_failures.emplace_back(x, y);
    }
  }
  return check;
}

std::optional<std::size_t> verify_complement_failure(const SetLattice& l,
                                                     const PastedLattice& k) {
  for (std::size_t x = 0; x < l.size(); ++x) {
    const auto c = l.complement(x);
    if (c && k.embed(*c) != k.logic().comp(k.embed(x))) return x;
  }
  return std::nullopt;
}

bool shared_by_all_blocks(const PastedLattice& k, Element cls) {
  std::set<std::size_t> blocks;
  for (const auto& n : k.members(cls)) blocks.insert(n.block);
  return blocks.size() == k.blocks().size();
}

}  // namespace qlogic
