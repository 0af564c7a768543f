#include "qlogic/coloring.hpp"

#include <algorithm>

#include "qlogic/error.hpp"

namespace qlogic {

const char* to_string(ColoringStatus status) {
  switch (status) {
    case ColoringStatus::satisfiable:
      return "satisfiable";
    case ColoringStatus::unsatisfiable:
      return "unsatisfiable";
    case ColoringStatus::aborted:
      return "aborted";
  }
  return "?";
}

namespace {

struct Index {
  explicit Index(const RaySet& rays) : tripods_of(rays.size()) {
    for (std::size_t t = 0; t < rays.tripods.size(); ++t) {
      for (auto r : rays.tripods[t]) tripods_of[r].push_back(t);
    }
  }
  std::vector<std::vector<std::size_t>> tripods_of;
};

bool assign_and_propagate(const RaySet& rays, const Index& index, PartialColoring& v,
                          std::vector<std::pair<std::size_t, int>> pending) {
  while (!pending.empty()) {
    auto [r, bit] = pending.back();
    pending.pop_back();
    if (v[r] == bit) continue;
    if (v[r] != -1) return false;
    v[r] = static_cast<signed char>(bit);
    if (bit == 1) {
      for (auto o : rays.adjacency[r]) {
        if (v[o] == 1) return false;
        if (v[o] == -1) pending.emplace_back(o, 0);
      }
    }
    for (auto t : index.tripods_of[r]) {
      int zeros = 0, ones = 0;
      std::size_t open = 0;
      for (auto x : rays.tripods[t]) {
        if (v[x] == 0) ++zeros;
        else if (v[x] == 1) ++ones;
        else open = x;
      }
      if (zeros == 3 || ones > 1) return false;
      if (zeros == 2 && ones == 0) pending.emplace_back(open, 1);
    }
  }
  return true;
}

class Search {
 public:
  Search(const RaySet& rays, const ColoringOptions& options, bool count_all)
      : rays_(rays), index_(rays), options_(options), count_all_(count_all) {}

  // True when the search stopped early (solution found or budget hit).
  bool run(PartialColoring& v) {
    if (++nodes_ > options_.node_budget) {
      aborted_ = true;
      return true;
    }
    const auto r = choose(v);
    if (!r) {
      ++solutions_;
      if (!solution_) solution_ = v;
      return !count_all_;
    }
    for (int bit : {1, 0}) {
      auto next = v;
      if (assign_and_propagate(rays_, index_, next, {{*r, bit}}) && run(next)) return true;
    }
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t solutions() const { return solutions_; }
  bool aborted() const { return aborted_; }
  const std::optional<PartialColoring>& solution() const { return solution_; }

 private:
  // Unassigned ray in the most tripods with a single other open ray, then
  // by degree, then by index.
  std::optional<std::size_t> choose(const PartialColoring& v) const {
    std::optional<std::size_t> best;
    std::pair<int, std::size_t> best_key{-1, 0};
    for (std::size_t r = 0; r < v.size(); ++r) {
      if (v[r] != -1) continue;
      int tight = 0;
      for (auto t : index_.tripods_of[r]) {
        int open = 0;
        for (auto x : rays_.tripods[t]) open += v[x] == -1;
        tight += open == 2;
      }
      const std::pair<int, std::size_t> key{tight, rays_.adjacency[r].size()};
      if (!best || key > best_key) {
        best = r;
        best_key = key;
      }
    }
    return best;
  }

  const RaySet& rays_;
  Index index_;
  ColoringOptions options_;
  bool count_all_;
  std::uint64_t nodes_ = 0;
  std::uint64_t solutions_ = 0;
  bool aborted_ = false;
  std::optional<PartialColoring> solution_;
};

}  // namespace

bool propagate(const RaySet& rays, PartialColoring& values) {
  if (values.size() != rays.size()) throw PreconditionError("coloring size mismatch");
  const Index index(rays);
  std::vector<std::pair<std::size_t, int>> pending;
  PartialColoring fresh(values.size(), -1);
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (values[r] != -1) pending.emplace_back(r, values[r]);
  }
  // Replays the given values so every constraint touching them fires.
  if (!assign_and_propagate(rays, index, fresh, pending)) return false;
  values = std::move(fresh);
  return true;
}

std::optional<std::string> check_coloring(const RaySet& rays, const std::vector<int>& values) {
  if (values.size() != rays.size()) return "coloring has wrong length";
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (values[r] != 0 && values[r] != 1) return "ray " + std::to_string(r) + " not 0/1";
    for (auto o : rays.adjacency[r]) {
      if (o > r && values[r] == 1 && values[o] == 1) {
        return "orthogonal rays " + std::to_string(r) + ", " + std::to_string(o) + " both 1";
      }
    }
  }
  for (const auto& t : rays.tripods) {
    if (values[t[0]] + values[t[1]] + values[t[2]] != 1) {
      return "tripod " + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
             std::to_string(t[2]) + " does not sum to 1";
    }
  }
  return std::nullopt;
}

ColoringResult search_coloring(const RaySet& rays, const ColoringOptions& options) {
  return search_coloring(rays, PartialColoring(rays.size(), -1), options);
}

ColoringResult search_coloring(const RaySet& rays, PartialColoring start,
                               const ColoringOptions& options) {
  ColoringResult result;
  if (!propagate(rays, start)) {
    result.status = ColoringStatus::unsatisfiable;
    result.nodes_explored = 1;
    return result;
  }
  Search search(rays, options, false);
  search.run(start);
  result.nodes_explored = search.nodes();
  if (search.solution()) {
    result.status = ColoringStatus::satisfiable;
    const auto& s = *search.solution();
    result.assignment = std::vector<int>(s.begin(), s.end());
  } else {
    result.status = search.aborted() ? ColoringStatus::aborted : ColoringStatus::unsatisfiable;
  }
  return result;
}

std::uint64_t count_colorings(const RaySet& rays, const ColoringOptions& options) {
  PartialColoring start(rays.size(), -1);
  if (!propagate(rays, start)) return 0;
  Search search(rays, options, true);
  search.run(start);
  if (search.aborted()) throw SearchBoundExceeded("coloring count exceeded the node budget");
  return search.solutions();
}

}  // namespace qlogic
