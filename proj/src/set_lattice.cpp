#include "qlogic/set_lattice.hpp"

#include <algorithm>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

constexpr std::size_t kMaxGround = 64;
constexpr std::size_t kMaxOrthoposetSize = 1024;

SetMask full_mask(std::size_t n) {
  return n == 64 ? ~SetMask{0} : ((SetMask{1} << n) - 1);
}

}  // namespace

SetLattice::SetLattice(std::vector<std::string> ground,
                       const std::map<std::string, std::vector<std::string>>& sets)
    : ground_(std::move(ground)) {
  if (ground_.size() > kMaxGround) {
    throw InvalidInput("ground set larger than 64 labels");
  }
  std::map<std::string, std::size_t> label;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (!label.emplace(ground_[i], i).second) {
      throw InvalidInput("duplicate ground label '" + ground_[i] + "'");
    }
  }
  for (const auto& [name, members] : sets) {
    SetMask m = 0;
    for (const auto& x : members) {
      auto it = label.find(x);
      if (it == label.end()) {
        throw InvalidInput("set of '" + name + "' uses unknown label '" + x + "'");
      }
      m |= SetMask{1} << it->second;
    }
    names_.push_back(name);
    masks_.push_back(m);
  }
  index_elements();

  const auto empty = by_mask_.find(0);
  const auto full = by_mask_.find(full_mask(ground_.size()));
  if (empty == by_mask_.end()) throw InvalidInput("family lacks the empty set");
  if (full == by_mask_.end()) throw InvalidInput("family lacks the full ground set");
  bottom_ = empty->second;
  top_ = full->second;

  // Existence of glb/lub; meet()/join() throw if missing.
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      meet(a, b);
      join(a, b);
    }
  }
}

void SetLattice::index_elements() {
  // Canonical order: lexicographic by name.
  std::vector<std::size_t> order(names_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return names_[a] < names_[b]; });
  std::vector<std::string> names;
  std::vector<SetMask> masks;
  for (auto i : order) {
    names.push_back(names_[i]);
    masks.push_back(masks_[i]);
  }
  names_ = std::move(names);
  masks_ = std::move(masks);
  by_mask_.clear();
  by_name_.clear();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!by_name_.emplace(names_[i], i).second) {
      throw InvalidInput("duplicate element id '" + names_[i] + "'");
    }
    if (!by_mask_.emplace(masks_[i], i).second) {
      throw InvalidInput("elements '" + names_[by_mask_[masks_[i]]] + "' and '" +
                         names_[i] + "' denote the same set");
    }
  }
}

std::optional<std::size_t> SetLattice::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SetLattice::find(SetMask mask) const {
  auto it = by_mask_.find(mask);
  if (it == by_mask_.end()) return std::nullopt;
  return it->second;
}

std::size_t SetLattice::meet(std::size_t a, std::size_t b) const {
  if (auto direct = find(masks_[a] & masks_[b])) return *direct;
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < size(); ++c) {
    if (leq(c, a) && leq(c, b) && (!best || leq(*best, c))) best = c;
  }
  for (std::size_t c = 0; c < size(); ++c) {
    if (leq(c, a) && leq(c, b) && !leq(c, *best)) {
      throw InvalidInput("no greatest lower bound of '" + names_[a] + "' and '" +
                         names_[b] + "'");
    }
  }
  return *best;
}

std::size_t SetLattice::join(std::size_t a, std::size_t b) const {
  if (auto direct = find(masks_[a] | masks_[b])) return *direct;
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < size(); ++c) {
    if (leq(a, c) && leq(b, c) && (!best || leq(c, *best))) best = c;
  }
  for (std::size_t c = 0; c < size(); ++c) {
    if (leq(a, c) && leq(b, c) && !leq(*best, c)) {
      throw InvalidInput("no least upper bound of '" + names_[a] + "' and '" +
                         names_[b] + "'");
    }
  }
  return *best;
}

std::vector<std::size_t> SetLattice::upper_covers(std::size_t a) const {
  std::vector<std::size_t> result;
  for (std::size_t b = 0; b < size(); ++b) {
    if (b == a || !leq(a, b)) continue;
    bool cover = true;
    for (std::size_t c = 0; c < size() && cover; ++c) {
      if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
    }
    if (cover) result.push_back(b);
  }
  return result;
}

std::optional<std::size_t> SetLattice::complement(std::size_t i) const {
  return find(full_mask(ground_.size()) & ~masks_[i]);
}

std::string SetLattice::format_set(SetMask mask) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (mask >> i & 1) {
      out += (first ? "" : ",") + ground_[i];
      first = false;
    }
  }
  return out + "}";
}

Orthoposet SetLattice::to_orthoposet() const {
  if (size() > kMaxOrthoposetSize) {
    throw InvalidInput("set lattice too large for an explicit orthoposet");
  }
  RawOrthoposet raw;
  raw.elements = names_;
  const bool is_powerset = size() == (std::size_t{1} << ground_.size());
  for (std::size_t a = 0; a < size(); ++a) {
    if (is_powerset) {
      for (std::size_t i = 0; i < ground_.size(); ++i) {
        const SetMask bit = SetMask{1} << i;
        if (!(masks_[a] & bit)) {
          raw.order.emplace_back(names_[a], names_[*find(masks_[a] | bit)]);
        }
      }
    } else {
      for (auto b : upper_covers(a)) raw.order.emplace_back(names_[a], names_[b]);
    }
    auto c = complement(a);
    if (!c) {
      throw InvalidInput("set complement of '" + names_[a] + "' not in the family");
    }
    raw.complement[names_[a]] = names_[*c];
  }
  raw.zero = names_[bottom_];
  raw.one = names_[top_];
  return Orthoposet::from_raw(raw);
}

SetLattice powerset(std::vector<std::string> ground, std::size_t bound) {
  if (ground.size() > bound || ground.size() > kMaxGround) {
    throw SearchBoundExceeded("powerset of " + std::to_string(ground.size()) +
                              " labels exceeds bound " + std::to_string(bound));
  }
  SetLattice lattice;
  lattice.ground_ = std::move(ground);
  const std::size_t n = lattice.ground_.size();
  for (SetMask m = 0; m <= full_mask(n); ++m) {
    lattice.masks_.push_back(m);
    lattice.names_.push_back(lattice.format_set(m));
    if (m == full_mask(n)) break;
  }
  lattice.index_elements();
  lattice.bottom_ = *lattice.find(SetMask{0});
  lattice.top_ = *lattice.find(full_mask(n));
  return lattice;
}

SetLattice build_boolean(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw SearchBoundExceeded("boolean algebra 2^" + std::to_string(n) +
                              " exceeds bound " + std::to_string(bound));
  }
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < n; ++i) {
    ground.push_back(i < 26 ? std::string(1, char('a' + i)) : "x" + std::to_string(i));
  }
  return powerset(std::move(ground), bound);
}

}  // namespace qlogic
