#include "qlogic/theory.hpp"

#include <algorithm>
#include <set>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

Proposition literal_conjunction(const TheoryModel& m, std::size_t atom) {
  std::optional<Proposition> out;
  for (std::size_t p = 0; p < m.names.size(); ++p) {
    auto lit = Proposition::simple(m.names[p]);
    if (!m.table[atom][p]) lit = Proposition::negation(lit);
    out = out ? conjunction(*out, lit) : lit;
  }
  return *out;
}

Proposition implies(const std::string& p, const std::string& q) {
  return Proposition::implication(Proposition::simple(p), Proposition::simple(q));
}

}  // namespace

std::size_t TheoryModel::name_index(const std::string& name) const {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) throw UnknownElement(name);
  return static_cast<std::size_t>(it - names.begin());
}

std::size_t TheoryModel::realized_dim() const {
  return std::set<ElementSet>(table.begin(), table.end()).size();
}

Assignment TheoryModel::valuation(std::size_t atom) const {
  Assignment t;
  for (std::size_t p = 0; p < names.size(); ++p) t[names[p]] = table.at(atom)[p];
  return t;
}

TheoryModel build_theory(const Orthoposet& l, const std::map<std::string, std::string>& f) {
  if (l.degenerate()) throw PreconditionError("degenerate algebra 0 = 1");
  if (f.empty()) throw InvalidInput("empty name map");
  TheoryModel m{l, {}, {}, l.atoms(), {}, {}, {}, {}, {}, {}};

  std::vector<ElementSet> below(l.size(), ElementSet(m.atoms.size()));
  for (Element x = 0; x < l.size(); ++x) {
    for (std::size_t a = 0; a < m.atoms.size(); ++a) below[x][a] = l.leq(m.atoms[a], x);
    if (x != l.zero() && below[x].none()) {
      throw InvalidInput("not atomic: no atom below '" + l.name(x) + "'");
    }
  }
  for (Element x = 0; x < l.size(); ++x) {
    for (Element y = 0; y < l.size(); ++y) {
      if (l.leq(x, y) != below[x].is_subset_of(below[y])) {
        throw InvalidInput("order not determined by atoms: '" + l.name(x) + "', '" +
                           l.name(y) + "'");
      }
    }
  }

  ElementSet hit(l.size());
  for (const auto& [name, value] : f) {
    m.names.push_back(name);
    m.f.push_back(l.at(value));
    hit.set(m.f.back());
  }
  if (!hit.all()) {
    for (Element x = 0; x < l.size(); ++x) {
      if (!hit[x]) throw InvalidInput("map not surjective: nothing maps to '" + l.name(x) + "'");
    }
  }

  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    ElementSet row(m.names.size());
    for (std::size_t p = 0; p < m.names.size(); ++p) row[p] = l.leq(m.atoms[a], m.f[p]);
    m.table.push_back(std::move(row));
  }

  // Classes of U under mutual implication in Th(X).
  const auto n = m.names.size();
  std::vector<std::vector<bool>> implies_in_t(n, std::vector<bool>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      implies_in_t[p][q] = in_theory(m, implies(m.names[p], m.names[q]));
    }
  }
  m.class_of.assign(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (m.class_of[p] != n) continue;
    const auto c = m.representative.size();
    m.representative.push_back(p);
    for (std::size_t q = p; q < n; ++q) {
      if (implies_in_t[p][q] && implies_in_t[q][p]) m.class_of[q] = c;
    }
  }
  const auto k = m.class_count();
  m.class_leq.assign(k, std::vector<bool>(k));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      m.class_leq[c][d] = implies_in_t[m.representative[c]][m.representative[d]];
    }
  }

  m.psi.resize(k);
  m.star.assign(k, k);
  for (std::size_t c = 0; c < k; ++c) m.psi[c] = m.f[m.representative[c]];
  for (std::size_t p = 0; p < n; ++p) {
    if (m.f[p] != m.psi[m.class_of[p]]) {
      throw Error("class of '" + m.names[p] + "' mixes elements of L");
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    const Element target = l.comp(m.psi[c]);
    for (std::size_t q = 0; q < n; ++q) {
      if (m.f[q] != target) continue;
      if (m.star[c] != k && m.star[c] != m.class_of[q]) {
        throw Error("star not well defined at '" + m.names[m.representative[c]] + "'");
      }
      m.star[c] = m.class_of[q];
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      if (m.class_leq[c][d] != l.leq(m.psi[c], m.psi[d])) {
        throw Error("class order differs from L at '" + m.names[m.representative[c]] +
                    "', '" + m.names[m.representative[d]] + "'");
      }
    }
  }
  return m;
}

bool in_theory(const TheoryModel& m, const Proposition& a) {
  for (std::size_t atom = 0; atom < m.atoms.size(); ++atom) {
    if (!eval(m.valuation(atom), a)) return false;
  }
  return true;
}

Proposition characteristic_formula(const TheoryModel& m) {
  ElementSet all(m.atoms.size());
  all.set();
  return realize(m, all);
}

ElementSet lindenbaum_class(const TheoryModel& m, const Proposition& a) {
  ElementSet bits(m.atoms.size());
  for (std::size_t atom = 0; atom < m.atoms.size(); ++atom) bits[atom] = eval(m.valuation(atom), a);
  return bits;
}

Proposition realize(const TheoryModel& m, const ElementSet& bits) {
  if (bits.size() != m.atoms.size()) throw PreconditionError("bit vector length mismatch");
  for (std::size_t a = 0; a < bits.size(); ++a) {
    for (std::size_t b = a + 1; b < bits.size(); ++b) {
      if (m.table[a] == m.table[b] && bits[a] != bits[b]) {
        throw PreconditionError("atoms share a valuation; class not realizable");
      }
    }
  }
  std::optional<Proposition> out;
  for (std::size_t a = 0; a < bits.size(); ++a) {
    if (!bits[a]) continue;
    auto term = literal_conjunction(m, a);
    out = out ? disjunction(*out, term) : term;
  }
  if (!out) {
    const auto first = Proposition::simple(m.names.front());
    return conjunction(first, Proposition::negation(first));
  }
  return *out;
}

MalhasEmbedding malhas_embed(const TheoryModel& m) {
  const auto& l = m.logic;
  MalhasEmbedding e;
  e.phi.assign(l.size(), ElementSet(m.atoms.size()));
  for (std::size_t p = 0; p < m.names.size(); ++p) {
    for (std::size_t a = 0; a < m.atoms.size(); ++a) e.phi[m.f[p]][a] = m.table[a][p];
  }
  for (Element x = 0; x < l.size(); ++x) {
    for (Element y = 0; y < l.size(); ++y) {
      if (x != y && e.phi[x] == e.phi[y]) e.injective = false;
      if (l.leq(x, y) && !e.phi[x].is_subset_of(e.phi[y])) e.order_preserving = false;
    }
  }
  const auto k = m.class_count();
  for (std::size_t c = 0; c < k; ++c) {
    const auto& gamma = e.phi[m.psi[c]];
    if (!e.phi[m.psi[m.star[c]]].is_subset_of(~gamma)) e.star_below_complement = false;
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c; d < k; ++d) {
      const auto& p = m.names[m.representative[c]];
      const auto& q = m.names[m.representative[d]];
      const auto claim = Proposition::implication(
          Proposition::simple(p), Proposition::negation(Proposition::simple(q)));
      if (in_theory(m, claim) && !l.orthogonal(m.psi[c], m.psi[d])) {
        e.strict_witnesses.emplace_back(p, q);
      }
    }
  }
  return e;
}

}  // namespace qlogic
