#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qlogic/io.hpp"
#include "qlogic/orthoposet.hpp"
#include "qlogic/set_lattice.hpp"
#include "qlogic/states.hpp"

namespace qtest {

using namespace qlogic;

inline std::filesystem::path data_path(const std::string& file) {
  return std::filesystem::path(QLOGIC_DATA_DIR) / file;
}

inline LatticeDocument load_doc(const std::string& file) {
  return parse_lattice(read_file(data_path(file)));
}

inline Orthoposet load_orthoposet(const std::string& file) {
  return to_orthoposet(load_doc(file));
}

inline SetLattice load_set_lattice(const std::string& file) {
  return to_set_lattice(load_doc(file));
}

inline Orthoposet mo2() { return build_mo(2); }

inline Orthoposet two_chain() {
  RawOrthoposet raw;
  raw.elements = {"0", "1"};
  raw.order = {{"0", "1"}};
  raw.complement = {{"0", "1"}, {"1", "0"}};
  raw.zero = "0";
  raw.one = "1";
  return Orthoposet::from_raw(raw);
}

inline Orthoposet l12() { return product(two_chain(), mo2()); }

// Orthoposet used throughout the suites: small Boolean algebras, MO_n,
// products and the lattices bundled under data/.
inline std::vector<std::pair<std::string, Orthoposet>> test_lattices() {
  std::vector<std::pair<std::string, Orthoposet>> out;
  out.emplace_back("2-chain", two_chain());
  for (std::size_t n = 1; n <= 4; ++n) {
    out.emplace_back("2^" + std::to_string(n), build_boolean(n).to_orthoposet());
  }
  for (std::size_t n = 1; n <= 4; ++n) out.emplace_back("MO" + std::to_string(n), build_mo(n));
  out.emplace_back("L12", l12());
  out.emplace_back("MO2xMO2", product(mo2(), mo2()));
  out.emplace_back("mo2.lat", load_orthoposet("mo2.lat"));
  out.emplace_back("boolean2.lat", load_orthoposet("boolean2.lat"));
  return out;
}

// Random orthoposet with at most 2 * pairs + 2 elements. Candidate orders
// are drawn as random relations closed under the complement duality and
// kept only when they validate, so the output covers non-lattices too.
inline Orthoposet random_orthoposet(std::mt19937_64& rng, std::size_t max_pairs = 5) {
  std::uniform_int_distribution<std::size_t> pair_count(1, max_pairs);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    const std::size_t k = pair_count(rng);
    RawOrthoposet raw;
    raw.zero = "0";
    raw.one = "1";
    raw.elements = {"0", "1"};
    raw.complement = {{"0", "1"}, {"1", "0"}};
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < k; ++i) {
      const std::string x = "x" + std::to_string(i);
      raw.elements.push_back(x + "+");
      raw.elements.push_back(x + "-");
      raw.complement[x + "+"] = x + "-";
      raw.complement[x + "-"] = x + "+";
      atoms.push_back(x + "+");
      atoms.push_back(x + "-");
    }
    for (const auto& e : atoms) {
      raw.order.emplace_back("0", e);
      raw.order.emplace_back(e, "1");
    }
    const double density = 0.05 + 0.25 * coin(rng);
    for (const auto& u : atoms) {
      for (const auto& v : atoms) {
        if (u == v || raw.complement[u] == v || coin(rng) >= density) continue;
        raw.order.emplace_back(u, v);
        raw.order.emplace_back(raw.complement[v], raw.complement[u]);
      }
    }
    auto result = validate_orthoposet(raw);
    if (result.poset) return *result.poset;
  }
}

// Every element subset of l that is an ideal, by direct scan.
inline std::vector<ElementSet> all_ideals(const Orthoposet& l) {
  const std::size_t n = l.size();
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (!(bits >> l.zero() & 1)) continue;
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      if (!(bits >> x & 1)) continue;
      if (bits >> l.comp(x) & 1) ok = false;
      for (Element y = 0; y < n && ok; ++y) {
        if (l.leq(y, x) && !(bits >> y & 1)) ok = false;
      }
    }
    if (!ok) continue;
    ElementSet s(n);
    for (Element x = 0; x < n; ++x) s[x] = bits >> x & 1;
    out.push_back(s);
  }
  return out;
}

// Inclusion-maximal ideals, sorted by sorted member names.
inline std::vector<ElementSet> maximal_ideals_by_scan(const Orthoposet& l) {
  const auto ideals = all_ideals(l);
  std::vector<ElementSet> out;
  for (const auto& i : ideals) {
    const bool maximal = std::none_of(ideals.begin(), ideals.end(), [&](const ElementSet& j) {
      return i != j && i.is_subset_of(j);
    });
    if (maximal) out.push_back(i);
  }
  auto key = [&](const ElementSet& s) {
    std::vector<std::string> names;
    for (Element x = 0; x < l.size(); ++x) {
      if (s[x]) names.push_back(l.name(x));
    }
    std::sort(names.begin(), names.end());
    return names;
  };
  std::sort(out.begin(), out.end(),
            [&](const ElementSet& a, const ElementSet& b) { return key(a) < key(b); });
  return out;
}

// Two-valued maps satisfying the state laws, by scan over all 2^n maps.
inline std::vector<ElementSet> states_by_scan(const Orthoposet& l, StateRegime regime) {
  const std::size_t n = l.size();
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    auto v = [&](Element x) { return static_cast<int>(bits >> x & 1); };
    if (v(l.zero()) != 0 || v(l.one()) != 1) continue;
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      if (v(l.comp(x)) != 1 - v(x)) ok = false;
      for (Element y = 0; y < n && ok; ++y) {
        if (l.leq(x, y) && v(x) > v(y)) ok = false;
        if (regime == StateRegime::additive && l.orthogonal(x, y)) {
          if (auto j = l.join(x, y); j && v(*j) != v(x) + v(y)) ok = false;
        }
      }
    }
    if (!ok) continue;
    ElementSet s(n);
    for (Element x = 0; x < n; ++x) s[x] = v(x);
    out.push_back(s);
  }
  return out;
}

inline std::vector<std::string> element_names(const Orthoposet& l, const ElementSet& s) {
  std::vector<std::string> out;
  for (Element x = 0; x < l.size(); ++x) {
    if (s[x]) out.push_back(l.name(x));
  }
  return out;
}

}  // namespace qtest
