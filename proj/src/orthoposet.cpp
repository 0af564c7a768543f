#include "qlogic/orthoposet.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "qlogic/error.hpp"

namespace qlogic {

bool ValidationReport::mentions(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

std::string ValidationReport::describe() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << v.axiom;
    if (!v.witness.empty()) {
      out << " [";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        out << (i ? ", " : "") << v.witness[i];
      }
      out << "]";
    }
    out << "\n";
  }
  return out.str();
}

namespace {

// Least upper bound among the candidates in `bounds`, if one exists.
std::optional<Element> least_of(const ElementSet& bounds,
                                const std::vector<ElementSet>& up) {
  for (auto e = bounds.find_first(); e != ElementSet::npos;
       e = bounds.find_next(e)) {
    if (bounds.is_subset_of(up[e])) return e;
  }
  return std::nullopt;
}

std::optional<Element> greatest_of(const ElementSet& bounds,
                                   const std::vector<ElementSet>& down) {
  for (auto e = bounds.find_first(); e != ElementSet::npos;
       e = bounds.find_next(e)) {
    if (bounds.is_subset_of(down[e])) return e;
  }
  return std::nullopt;
}

}  // namespace

ValidationResult validate_orthoposet(const RawOrthoposet& raw) {
  ValidationResult result;
  auto& violations = result.report.violations;

  std::vector<std::string> names = raw.elements;
  std::sort(names.begin(), names.end());
  for (std::size_t i = 1; i < names.size(); ++i) {
    if (names[i] == names[i - 1]) {
      violations.push_back({"duplicate element id", {names[i]}});
    }
  }
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.empty()) {
    violations.push_back({"empty carrier", {}});
    return result;
  }

  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < names.size(); ++i) index[names[i]] = i;
  auto known = [&](const std::string& id) {
    if (index.count(id)) return true;
    violations.push_back({"unknown element", {id}});
    return false;
  };

  bool resolvable = known(raw.zero) & known(raw.one);
  for (const auto& [x, y] : raw.order) resolvable &= known(x) & known(y);
  for (const auto& [x, y] : raw.complement) resolvable &= known(x) & known(y);
  if (!violations.empty() || !resolvable) return result;

  const std::size_t n = names.size();
  std::vector<Element> comp(n, n);
  for (const auto& [x, y] : raw.complement) comp[index[x]] = index[y];
  for (Element i = 0; i < n; ++i) {
    if (comp[i] == n) violations.push_back({"complement undefined", {names[i]}});
  }
  if (!violations.empty()) return result;

  std::vector<ElementSet> up(n, ElementSet(n));
  for (Element i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [x, y] : raw.order) up[index[x]].set(index[y]);
  // Warshall closure on bit rows.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  std::vector<ElementSet> down(n, ElementSet(n));
  for (Element i = 0; i < n; ++i) {
    for (auto j = up[i].find_first(); j != ElementSet::npos;
         j = up[i].find_next(j)) {
      down[j].set(i);
    }
  }

  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (up[i].test(j) && up[j].test(i)) {
        violations.push_back({"order not antisymmetric", {names[i], names[j]}});
      }
    }
  }

  const Element zero = index[raw.zero];
  const Element one = index[raw.one];
  for (Element p = 0; p < n; ++p) {
    if (!up[zero].test(p)) violations.push_back({"zero not below", {names[p]}});
    if (!up[p].test(one)) violations.push_back({"one not above", {names[p]}});
  }

  for (Element p = 0; p < n; ++p) {
    if (comp[comp[p]] != p) {
      violations.push_back({"complement not involutive",
                            {names[p], names[comp[p]], names[comp[comp[p]]]}});
    }
  }
  for (Element p = 0; p < n; ++p) {
    for (auto q = up[p].find_first(); q != ElementSet::npos;
         q = up[p].find_next(q)) {
      if (!up[comp[q]].test(comp[p])) {
        violations.push_back(
            {"complement not order-reversing", {names[p], names[q]}});
      }
    }
  }
  for (Element p = 0; p < n; ++p) {
    if (comp[p] == p && n > 1) {
      violations.push_back({"complement has a fixed point", {names[p]}});
    }
    const auto lub = least_of(up[p] & up[comp[p]], up);
    if (lub != one) {
      violations.push_back(
          {"lub(p,p') != 1",
           {names[p], names[comp[p]], lub ? names[*lub] : "(none)"}});
    }
    const auto glb = greatest_of(down[p] & down[comp[p]], down);
    if (glb != zero) {
      violations.push_back(
          {"glb(p,p') != 0",
           {names[p], names[comp[p]], glb ? names[*glb] : "(none)"}});
    }
  }
  if (!violations.empty()) return result;

  Orthoposet poset;
  poset.names_ = std::move(names);
  poset.index_ = std::move(index);
  poset.up_ = std::move(up);
  poset.down_ = std::move(down);
  poset.comp_ = std::move(comp);
  poset.zero_ = zero;
  poset.one_ = one;
  result.poset = std::move(poset);
  return result;
}

Orthoposet Orthoposet::from_raw(const RawOrthoposet& raw) {
  auto result = validate_orthoposet(raw);
  if (!result.poset) {
    throw InvalidInput("not an orthoposet:\n" + result.report.describe());
  }
  return std::move(*result.poset);
}

std::optional<Element> Orthoposet::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Orthoposet::at(const std::string& id) const {
  auto e = find(id);
  if (!e) throw UnknownElement(id);
  return *e;
}

std::optional<Element> Orthoposet::meet(Element a, Element b) const {
  return greatest_of(down_.at(a) & down_.at(b), down_);
}

std::optional<Element> Orthoposet::join(Element a, Element b) const {
  return least_of(up_.at(a) & up_.at(b), up_);
}

bool Orthoposet::is_lattice() const {
  for (Element a = 0; a < size(); ++a) {
    for (Element b = a + 1; b < size(); ++b) {
      // Joins follow from meets through the complement.
      if (!meet(a, b)) return false;
    }
  }
  return true;
}

std::vector<Element> Orthoposet::atoms() const {
  std::vector<Element> result;
  if (degenerate()) return result;
  for (Element e = 0; e < size(); ++e) {
    if (e != zero_ && down_[e].count() == 2) result.push_back(e);
  }
  return result;
}

std::vector<Element> Orthoposet::coatoms() const {
  std::vector<Element> result;
  if (degenerate()) return result;
  for (Element e = 0; e < size(); ++e) {
    if (e != one_ && up_[e].count() == 2) result.push_back(e);
  }
  return result;
}

std::vector<std::pair<Element, Element>> Orthoposet::covers() const {
  std::vector<std::pair<Element, Element>> result;
  for (Element x = 0; x < size(); ++x) {
    for (auto y = up_[x].find_first(); y != ElementSet::npos;
         y = up_[x].find_next(y)) {
      if (y == x) continue;
      // Interval [x, y] has exactly the two endpoints.
      if ((up_[x] & down_[y]).count() == 2) result.emplace_back(x, y);
    }
  }
  return result;
}

RawOrthoposet Orthoposet::to_raw() const {
  RawOrthoposet raw;
  raw.elements = names_;
  for (auto [x, y] : covers()) raw.order.emplace_back(names_[x], names_[y]);
  for (Element e = 0; e < size(); ++e) raw.complement[names_[e]] = names_[comp_[e]];
  raw.zero = names_[zero_];
  raw.one = names_[one_];
  return raw;
}

bool operator==(const Orthoposet& a, const Orthoposet& b) {
  return a.names_ == b.names_ && a.up_ == b.up_ && a.comp_ == b.comp_ &&
         a.zero_ == b.zero_ && a.one_ == b.one_;
}

namespace {

std::string pair_letter(std::size_t k) {
  static const std::string letters = "pqrstuvwxyz";
  if (k < letters.size()) return std::string(1, letters[k]);
  return "a" + std::to_string(k);
}

}  // namespace

Orthoposet build_mo(std::size_t n) {
  if (n == 0) throw PreconditionError("MO_n needs n >= 1");
  RawOrthoposet raw;
  raw.zero = "0";
  raw.one = "1";
  raw.elements = {"0", "1"};
  raw.complement = {{"0", "1"}, {"1", "0"}};
  for (std::size_t k = 0; k < n; ++k) {
    const auto minus = pair_letter(k) + "-";
    const auto plus = pair_letter(k) + "+";
    for (const auto& atom : {minus, plus}) {
      raw.elements.push_back(atom);
      raw.order.emplace_back("0", atom);
      raw.order.emplace_back(atom, "1");
    }
    raw.complement[minus] = plus;
    raw.complement[plus] = minus;
  }
  return Orthoposet::from_raw(raw);
}

Orthoposet product(const Orthoposet& a, const Orthoposet& b) {
  RawOrthoposet raw;
  auto id = [&](Element x, Element y) { return a.name(x) + "|" + b.name(y); };
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < b.size(); ++y) {
      raw.elements.push_back(id(x, y));
      raw.complement[id(x, y)] = id(a.comp(x), b.comp(y));
    }
  }
  for (auto [x1, x2] : a.covers()) {
    for (Element y = 0; y < b.size(); ++y) raw.order.emplace_back(id(x1, y), id(x2, y));
  }
  for (auto [y1, y2] : b.covers()) {
    for (Element x = 0; x < a.size(); ++x) raw.order.emplace_back(id(x, y1), id(x, y2));
  }
  raw.zero = id(a.zero(), b.zero());
  raw.one = id(a.one(), b.one());
  return Orthoposet::from_raw(raw);
}

namespace {

struct BoundTables {
  std::vector<std::vector<Element>> meet, join;
};

BoundTables bound_tables(const Orthoposet& l) {
  const auto n = l.size();
  BoundTables t{std::vector<std::vector<Element>>(n, std::vector<Element>(n)),
                std::vector<std::vector<Element>>(n, std::vector<Element>(n))};
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      auto m = l.meet(a, b);
      auto j = l.join(a, b);
      if (!m || !j) {
        throw InvalidInput("not a lattice: bound of " + l.name(a) + " and " +
                           l.name(b) + " missing");
      }
      t.meet[a][b] = t.meet[b][a] = *m;
      t.join[a][b] = t.join[b][a] = *j;
    }
  }
  return t;
}

}  // namespace

bool violates_distributivity(const Orthoposet& l, const Triple& t) {
  auto m = [&](Element a, Element b) {
    auto r = l.meet(a, b);
    if (!r) throw InvalidInput("not a lattice: meet missing");
    return *r;
  };
  auto j = [&](Element a, Element b) {
    auto r = l.join(a, b);
    if (!r) throw InvalidInput("not a lattice: join missing");
    return *r;
  };
  return m(t.p, j(t.q, t.r)) != j(m(t.p, t.q), m(t.p, t.r));
}

std::optional<Triple> find_distributivity_violation(const Orthoposet& l) {
  const auto t = bound_tables(l);
  const auto n = l.size();
  auto bad = [&](Element p, Element q, Element r) {
    return t.meet[p][t.join[q][r]] != t.join[t.meet[p][q]][t.meet[p][r]];
  };
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (bad(p, q, l.comp(q))) return Triple{p, q, l.comp(q)};
    }
  }
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      for (Element r = 0; r < n; ++r) {
        if (bad(p, q, r)) return Triple{p, q, r};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Element, 3>> co_measurable_witness(
    const Orthoposet& l, Element p, Element q) {
  const auto& below_p = l.downset(p);
  const auto& below_q = l.downset(q);
  const ElementSet common = below_p & below_q;
  for (auto a = common.find_first(); a != ElementSet::npos;
       a = common.find_next(a)) {
    for (auto b = below_p.find_first(); b != ElementSet::npos;
         b = below_p.find_next(b)) {
      if (!l.orthogonal(a, b) || l.join(a, b) != p) continue;
      for (auto c = below_q.find_first(); c != ElementSet::npos;
           c = below_q.find_next(c)) {
        if (l.orthogonal(a, c) && l.orthogonal(b, c) && l.join(a, c) == q) {
          return std::array<Element, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

bool co_measurable(const Orthoposet& l, Element p, Element q) {
  return co_measurable_witness(l, p, q).has_value();
}

std::optional<std::vector<Element>> find_isomorphism(const Orthoposet& a,
                                                     const Orthoposet& b) {
  const auto n = a.size();
  if (n != b.size()) return std::nullopt;
  auto signature = [](const Orthoposet& l, Element e) {
    return std::pair(l.upset(e).count(), l.downset(e).count());
  };
  std::vector<Element> image(n, n);
  std::vector<bool> used(n, false);

  std::function<bool(Element)> extend = [&](Element x) -> bool {
    if (x == n) return true;
    if (image[x] != n) return extend(x + 1);
    for (Element y = 0; y < n; ++y) {
      if (used[y] || signature(a, x) != signature(b, y)) continue;
      const Element cx = a.comp(x);
      const Element cy = b.comp(y);
      if ((cx == x) != (cy == y)) continue;
      if (cx != x && (image[cx] != n || used[cy])) continue;
      bool consistent = true;
      auto check = [&](Element u, Element v) {
        for (Element z = 0; z < n && consistent; ++z) {
          if (image[z] == n) continue;
          if (a.leq(u, z) != b.leq(v, image[z]) ||
              a.leq(z, u) != b.leq(image[z], v)) {
            consistent = false;
          }
        }
      };
      image[x] = y;
      used[y] = true;
      image[cx] = cy;
      used[cy] = true;
      check(x, y);
      check(cx, cy);
      if (consistent && extend(x + 1)) return true;
      image[x] = n;
      used[y] = false;
      image[cx] = n;
      used[cy] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace qlogic
