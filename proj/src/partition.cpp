#include "qlogic/partition.hpp"

#include <set>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

constexpr std::size_t kMaxPoints = 62;
constexpr std::size_t kMaxCells = 16;

std::vector<SetMask> cell_masks(std::size_t n, const Partition& partition, std::size_t index) {
  const std::string where = "partition " + std::to_string(index + 1);
  std::vector<SetMask> cells;
  SetMask seen = 0;
  for (const auto& block : partition) {
    if (block.empty()) throw InvalidInput(where + ": empty block");
    SetMask cell = 0;
    for (int point : block) {
      if (point < 1 || static_cast<std::size_t>(point) > n) {
        throw InvalidInput(where + ": point " + std::to_string(point) + " outside 1.." +
                           std::to_string(n));
      }
      const SetMask bit = SetMask{1} << (point - 1);
      if ((seen | cell) & bit) {
        throw InvalidInput(where + ": point " + std::to_string(point) + " in two blocks");
      }
      cell |= bit;
    }
    seen |= cell;
    cells.push_back(cell);
  }
  const SetMask full = (SetMask{1} << n) - 1;
  if (seen != full) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(seen >> i & 1)) {
        throw InvalidInput(where + ": point " + std::to_string(i + 1) + " not covered");
      }
    }
  }
  if (cells.size() > kMaxCells) throw SearchBoundExceeded(where + ": too many blocks");
  return cells;
}

}  // namespace

std::string PartitionLogic::set_name(SetMask s, std::size_t n) {
  std::string out = "{";
  for (std::size_t i = 0; i < n; ++i) {
    if (s >> i & 1) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
  }
  return out + "}";
}

PartitionLogic build_partition_logic(std::size_t n, const std::vector<Partition>& partitions,
                                     const std::map<std::string, std::string>& labels) {
  if (n == 0 || n > kMaxPoints) {
    throw InvalidInput("ground size must lie in 1.." + std::to_string(kMaxPoints));
  }
  if (partitions.empty()) throw InvalidInput("no partitions");
  const SetMask full = (SetMask{1} << n) - 1;

  std::set<SetMask> masks;
  std::set<std::pair<SetMask, SetMask>> covers;
  for (std::size_t k = 0; k < partitions.size(); ++k) {
    const auto cells = cell_masks(n, partitions[k], k);
    const std::uint64_t subsets = std::uint64_t{1} << cells.size();
    for (std::uint64_t pick = 0; pick < subsets; ++pick) {
      SetMask u = 0;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (pick >> c & 1) u |= cells[c];
      }
      masks.insert(u);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (!(pick >> c & 1)) covers.emplace(u, u | cells[c]);
      }
    }
  }

  std::map<SetMask, std::string> names;
  std::set<std::string> used;
  for (auto s : masks) {
    auto plain = PartitionLogic::set_name(s, n);
    auto it = labels.find(plain);
    names[s] = it == labels.end() ? plain : it->second;
    if (!used.insert(names[s]).second) throw InvalidInput("duplicate label '" + names[s] + "'");
  }
  for (const auto& [key, label] : labels) {
    bool known = false;
    for (auto s : masks) known |= PartitionLogic::set_name(s, n) == key;
    if (!known) throw UnknownElement(key);
  }

  RawOrthoposet raw;
  for (auto s : masks) {
    raw.elements.push_back(names[s]);
    raw.complement[names[s]] = names.at(full & ~s);
  }
  for (const auto& [x, y] : covers) raw.order.emplace_back(names[x], names[y]);
  raw.zero = names[0];
  raw.one = names[full];

  PartitionLogic pl{n, partitions, Orthoposet::from_raw(raw), {}};
  pl.sets.resize(pl.logic.size());
  for (auto s : masks) pl.sets[pl.logic.at(names[s])] = s;
  return pl;
}

PartitionEmbeddingCheck verify_partition_embedding(const PartitionLogic& pl) {
  const auto& l = pl.logic;
  const SetMask full = (SetMask{1} << pl.n) - 1;
  PartitionEmbeddingCheck check;
  for (Element p = 0; p < l.size(); ++p) {
    for (Element q = 0; q < l.size(); ++q) {
      if (p != q && pl.sets[p] == pl.sets[q]) check.injective = false;
      if (l.leq(p, q) && (pl.sets[p] & ~pl.sets[q])) check.order_preserving = false;
    }
  }
  for (Element p = 0; p < l.size(); ++p) {
    for (Element q = p; q < l.size(); ++q) {
      if (!co_measurable(l, p, q)) continue;
      ++check.co_measurable_pairs;
      const auto j = l.join(p, q);
      const auto m = l.meet(p, q);
      const bool ok = pl.sets[l.comp(p)] == (full & ~pl.sets[p]) &&
                      pl.sets[l.comp(q)] == (full & ~pl.sets[q]) && j &&
                      pl.sets[*j] == (pl.sets[p] | pl.sets[q]) && m &&
                      pl.sets[*m] == (pl.sets[p] & pl.sets[q]);
      if (!ok) check.operation_failures.emplace_back(p, q);
    }
  }
  return check;
}

std::vector<TwoValuedState> point_states(const PartitionLogic& pl) {
  std::vector<TwoValuedState> out;
  for (std::size_t i = 0; i < pl.n; ++i) {
    ElementSet values(pl.logic.size());
    for (Element x = 0; x < pl.logic.size(); ++x) values[x] = pl.sets[x] >> i & 1;
    out.push_back({values, StateRegime::morphism});
  }
  return out;
}

}  // namespace qlogic
