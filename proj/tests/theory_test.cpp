#include <doctest.h>

#include "qlogic/error.hpp"
#include "qlogic/theory.hpp"
#include "support.hpp"

using namespace qtest;

namespace {

const std::map<std::string, std::string> kMo2Map = {{"A", "0"},  {"B", "p-"}, {"C", "p-"},
                                                    {"D", "p+"}, {"E", "q-"}, {"F", "q+"},
                                                    {"G", "1"},  {"H", "1"}};

// Truth table rows keyed by atom, columns A..H.
const std::map<std::string, std::string> kTable1 = {
    {"p-", "01100011"}, {"p+", "00010011"}, {"q-", "00001011"}, {"q+", "00000111"}};

std::size_t atom_index(const TheoryModel& m, const std::string& id) {
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    if (m.logic.name(m.atoms[a]) == id) return a;
  }
  FAIL("no atom " << id);
  return 0;
}

// Random surjection onto l with at most max_names names.
std::map<std::string, std::string> random_map(const Orthoposet& l, std::size_t max_names,
                                              std::mt19937_64& rng) {
  std::vector<std::string> targets = l.names();
  std::uniform_int_distribution<std::size_t> extra(0, max_names - l.size());
  const std::size_t n = l.size() + extra(rng);
  for (std::size_t i = l.size(); i < n; ++i) targets.push_back(l.name(rng() % l.size()));
  std::shuffle(targets.begin(), targets.end(), rng);
  std::map<std::string, std::string> f;
  for (std::size_t i = 0; i < n; ++i) f["u" + std::to_string(i)] = targets[i];
  return f;
}

void check_key_lemma(const TheoryModel& m) {
  const std::vector<Proposition> chi{characteristic_formula(m)};
  for (std::size_t p = 0; p < m.names.size(); ++p) {
    for (std::size_t q = 0; q < m.names.size(); ++q) {
      auto impl = Proposition::implication(Proposition::simple(m.names[p]),
                                           Proposition::simple(m.names[q]));
      const bool by_entails = entails(chi, impl);
      CHECK(by_entails == m.logic.leq(m.f[p], m.f[q]));
      CHECK(by_entails == in_theory(m, impl));
      CHECK(by_entails == m.class_leq[m.class_of[p]][m.class_of[q]]);
    }
  }
}

}  // namespace

TEST_CASE("MO2 truth table") {
  auto m = build_theory(mo2(), kMo2Map);
  REQUIRE(m.names == std::vector<std::string>{"A", "B", "C", "D", "E", "F", "G", "H"});
  for (const auto& [atom, row] : kTable1) {
    const auto a = atom_index(m, atom);
    for (std::size_t i = 0; i < 8; ++i) {
      CAPTURE(atom);
      CAPTURE(i);
      CHECK(m.table[a][i] == (row[i] == '1'));
    }
  }
  CHECK(m.realized_dim() == 4);
  CHECK(m.lindenbaum_dim() == 4);
}

TEST_CASE("MO2 model has six classes") {
  auto m = build_theory(mo2(), kMo2Map);
  REQUIRE(m.class_count() == 6);
  std::vector<std::string> reps;
  for (auto r : m.representative) reps.push_back(m.names[r]);
  std::sort(reps.begin(), reps.end());
  CHECK(reps == std::vector<std::string>{"A", "B", "D", "E", "F", "G"});
  CHECK(m.class_of[m.name_index("B")] == m.class_of[m.name_index("C")]);
  CHECK(m.class_of[m.name_index("G")] == m.class_of[m.name_index("H")]);
  CHECK(m.class_of[m.name_index("B")] != m.class_of[m.name_index("D")]);
  CHECK(m.star[m.class_of[m.name_index("B")]] == m.class_of[m.name_index("D")]);
  check_key_lemma(m);
}

TEST_CASE("valuations follow the table") {
  auto m = build_theory(mo2(), kMo2Map);
  auto t = m.valuation(atom_index(m, "p-"));
  CHECK(t.at("B"));
  CHECK(t.at("C"));
  CHECK_FALSE(t.at("D"));
  CHECK(eval(t, parse("B -> G")));
}

TEST_CASE("embedding of the MO2 model") {
  auto m = build_theory(mo2(), kMo2Map);
  auto e = malhas_embed(m);
  CHECK(e.ok());
  const auto& l = m.logic;
  auto bit = [&](const char* x, const char* atom) { return e.phi[l.at(x)][atom_index(m, atom)]; };
  CHECK(bit("p-", "p-"));
  CHECK_FALSE(bit("p-", "p+"));
  CHECK_FALSE(bit("p-", "q-"));
  CHECK_FALSE(bit("p-", "q+"));
  CHECK(e.phi[l.zero()].none());
  CHECK(e.phi[l.one()].all());

  bool be = false;
  for (const auto& [x, y] : e.strict_witnesses) be |= x == "B" && y == "E";
  CHECK(be);
  auto b_e = parse("B -> E'");
  CHECK(entails({characteristic_formula(m)}, b_e));
  CHECK(in_theory(m, b_e));
  CHECK(l.at(kMo2Map.at("B")) != l.comp(l.at(kMo2Map.at("E"))));
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    auto t = m.valuation(a);
    CHECK_FALSE((t.at("B") && t.at("E")));
  }
}

TEST_CASE("Lindenbaum classes are the full Boolean algebra") {
  auto m = build_theory(mo2(), kMo2Map);
  for (unsigned bits = 0; bits < 16; ++bits) {
    ElementSet v(4, bits);
    auto a = realize(m, v);
    CHECK(lindenbaum_class(m, a) == v);
  }
}

TEST_CASE("identity map on the square") {
  auto l = build_boolean(2).to_orthoposet();
  std::map<std::string, std::string> f;
  for (const auto& n : l.names()) f[n] = n;
  auto m = build_theory(l, f);
  CHECK(m.lindenbaum_dim() == 2);
  CHECK(m.class_count() == 4);
  auto e = malhas_embed(m);
  CHECK(e.ok());
  CHECK(e.strict_witnesses.empty());
  check_key_lemma(m);
}

TEST_CASE("build_theory rejections") {
  auto l = mo2();
  auto partial = kMo2Map;
  partial.erase("F");
  CHECK_THROWS_AS(build_theory(l, partial), InvalidInput);
  auto unknown = kMo2Map;
  unknown["Z"] = "r+";
  CHECK_THROWS_AS(build_theory(l, unknown), UnknownElement);

  // Four-element chain: the atoms do not determine the order.
  RawOrthoposet raw;
  raw.elements = {"0", "a", "b", "1"};
  raw.order = {{"0", "a"}, {"a", "b"}, {"b", "1"}};
  raw.complement = {{"0", "1"}, {"1", "0"}, {"a", "b"}, {"b", "a"}};
  raw.zero = "0";
  raw.one = "1";
  auto chain = validate_orthoposet(raw);
  if (chain.poset) {
    CHECK_THROWS_AS(build_theory(*chain.poset, {{"w", "0"}, {"x", "a"}, {"y", "b"}, {"z", "1"}}),
                    InvalidInput);
  }
}

TEST_CASE("key lemma and embedding on generated models") {
  std::mt19937_64 rng(71);
  std::vector<Orthoposet> logics{two_chain(), build_boolean(2).to_orthoposet(), mo2(),
                                 build_boolean(3).to_orthoposet(), build_mo(3)};
  for (int round = 0; round < 100; ++round) {
    const auto& l = logics[round % logics.size()];
    auto m = build_theory(l, random_map(l, 8, rng));
    CHECK(m.class_count() == l.size());
    CHECK(m.realized_dim() == m.lindenbaum_dim());
    check_key_lemma(m);
    auto e = malhas_embed(m);
    CHECK(e.ok());
    if (find_distributivity_violation(l)) CHECK_FALSE(e.strict_witnesses.empty());
  }
}
