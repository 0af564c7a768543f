#include <doctest.h>

#include "qlogic/error.hpp"
#include "support.hpp"

using namespace qtest;

namespace {

RawOrthoposet mo2_raw() { return mo2().to_raw(); }

bool in_family_of_spec_witness(const Orthoposet& l, const Triple& t) {
  // (p, q, q') with p an atom from the other pair: the family of p ^ (q v q').
  return l.comp(t.q) == t.r && t.p != t.q && t.p != t.r && t.p != l.zero() &&
         t.p != l.one() && t.q != l.zero() && t.q != l.one();
}

}  // namespace

TEST_CASE("MO2 validates with six elements") {
  auto result = validate_orthoposet(mo2_raw());
  REQUIRE(result.poset);
  CHECK(result.poset->size() == 6);
  CHECK(result.poset->names() == std::vector<std::string>{"0", "1", "p+", "p-", "q+", "q-"});
  CHECK(load_orthoposet("mo2.lat") == mo2());
}

TEST_CASE("two-element chain is an orthoposet") {
  auto l = two_chain();
  CHECK(l.size() == 2);
  CHECK(l.comp(l.zero()) == l.one());
}

TEST_CASE("complement with a fixed point is reported with the element") {
  auto raw = mo2_raw();
  raw.complement["p-"] = "p-";
  auto result = validate_orthoposet(raw);
  CHECK_FALSE(result.poset);
  bool named = false;
  for (const auto& v : result.report.violations) {
    if (std::find(v.witness.begin(), v.witness.end(), "p-") != v.witness.end()) named = true;
  }
  CHECK(named);
  CHECK_THROWS_AS(Orthoposet::from_raw(raw), InvalidInput);
}

TEST_CASE("duplicate ids and cycles are diagnosed") {
  auto raw = mo2_raw();
  raw.elements.push_back("p-");
  CHECK(validate_orthoposet(raw).report.mentions("duplicate element id"));

  raw = mo2_raw();
  raw.order.emplace_back("1", "p-");
  CHECK(validate_orthoposet(raw).report.mentions("order not antisymmetric"));

  raw = mo2_raw();
  raw.complement["p-"] = "q+";
  CHECK_FALSE(validate_orthoposet(raw).report.ok());
}

TEST_CASE("build_mo sizes") {
  CHECK(build_mo(2).size() == 6);
  CHECK(build_mo(3).size() == 8);
  CHECK(build_mo(3).atoms().size() == 6);
  CHECK_THROWS_AS(build_mo(0), PreconditionError);
  auto square = build_boolean(2).to_orthoposet();
  CHECK(find_isomorphism(build_mo(1), square));
}

TEST_CASE("build_boolean sizes and degenerate case") {
  CHECK(build_boolean(2).size() == 4);
  CHECK(build_boolean(3).size() == 8);
  CHECK(build_boolean(3).to_orthoposet().atoms().size() == 3);
  CHECK(build_boolean(0).degenerate());
  CHECK(build_boolean(0).size() == 1);
  CHECK_THROWS(build_boolean(21));
}

TEST_CASE("meets and joins in MO2 and the pentagon") {
  auto l = mo2();
  const auto pm = l.at("p-"), qm = l.at("q-"), qp = l.at("q+");
  REQUIRE(l.join(qm, qp));
  CHECK(*l.join(qm, qp) == l.one());
  CHECK(l.meet(pm, *l.join(qm, qp)) == pm);
  for (Element p = 0; p < l.size(); ++p) CHECK(l.meet(p, l.one()) == p);
  CHECK_THROWS_AS(l.at("r-"), UnknownElement);

  auto pentagon = load_set_lattice("pentagon.lat");
  CHECK(pentagon.meet(*pentagon.find("ab"), *pentagon.find("d")) == pentagon.bottom());
  CHECK(pentagon.join(*pentagon.find("a"), *pentagon.find("d")) == pentagon.top());
}

TEST_CASE("distributivity witness on MO2 belongs to the p ^ (q v q') family") {
  auto l = mo2();
  auto t = find_distributivity_violation(l);
  REQUIRE(t);
  CHECK(violates_distributivity(l, *t));
  CHECK(in_family_of_spec_witness(l, *t));
  CHECK(violates_distributivity(l, {l.at("p-"), l.at("q-"), l.at("q+")}));
}

TEST_CASE("Boolean algebras are distributive, MO_n and L12 are not") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto b = build_boolean(n);
    if (b.degenerate()) continue;
    auto l = b.to_orthoposet();
    CHECK(validate_orthoposet(l.to_raw()).poset);
    CHECK_FALSE(find_distributivity_violation(l));
  }
  for (std::size_t n = 2; n <= 5; ++n) CHECK(find_distributivity_violation(build_mo(n)));
  auto big = l12();
  CHECK(big.size() == 12);
  auto t = find_distributivity_violation(big);
  REQUIRE(t);
  CHECK(violates_distributivity(big, *t));
}

TEST_CASE("co-measurability in MO2") {
  auto l = mo2();
  CHECK(co_measurable(l, l.at("p-"), l.at("p+")));
  CHECK_FALSE(co_measurable(l, l.at("p-"), l.at("q-")));
  for (Element p = 0; p < l.size(); ++p) CHECK(co_measurable(l, p, p));
}

TEST_CASE("co-measurability agrees with a direct triple scan") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 40; ++round) {
    auto l = random_orthoposet(rng, 4);
    for (Element p = 0; p < l.size(); ++p) {
      for (Element q = 0; q < l.size(); ++q) {
        bool expected = false;
        for (Element a = 0; a < l.size() && !expected; ++a) {
          for (Element b = 0; b < l.size() && !expected; ++b) {
            for (Element c = 0; c < l.size() && !expected; ++c) {
              if (!l.orthogonal(a, b) || !l.orthogonal(a, c) || !l.orthogonal(b, c)) continue;
              expected = l.join(a, b) == p && l.join(a, c) == q;
            }
          }
        }
        CHECK(co_measurable(l, p, q) == expected);
      }
    }
  }
}

TEST_CASE("orthoposet axioms hold exhaustively on generated structures") {
  std::mt19937_64 rng(3);
  auto lattices = test_lattices();
  for (int i = 0; i < 100; ++i) lattices.emplace_back("random", random_orthoposet(rng));
  for (const auto& [name, l] : lattices) {
    CAPTURE(name);
    for (Element p = 0; p < l.size(); ++p) {
      CHECK(l.comp(l.comp(p)) == p);
      CHECK(l.join(p, l.comp(p)) == l.one());
      CHECK(l.meet(p, l.comp(p)) == l.zero());
      for (Element q = 0; q < l.size(); ++q) {
        if (l.leq(p, q)) CHECK(l.leq(l.comp(q), l.comp(p)));
        if (auto m = l.meet(p, q)) {
          // Uniqueness: any lower bound above the meet is the meet.
          for (Element r = 0; r < l.size(); ++r) {
            if (l.leq(r, p) && l.leq(r, q)) CHECK(l.leq(r, *m));
          }
        }
      }
    }
  }
}

TEST_CASE("to_raw round trip and input order independence") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto l = random_orthoposet(rng);
    auto raw = l.to_raw();
    CHECK(Orthoposet::from_raw(raw) == l);
    std::shuffle(raw.elements.begin(), raw.elements.end(), rng);
    std::shuffle(raw.order.begin(), raw.order.end(), rng);
    CHECK(Orthoposet::from_raw(raw) == l);
  }
}

TEST_CASE("non-lattice input is signalled by the distributivity scan") {
  // Two atom pairs whose upper bounds overlap without a least one.
  RawOrthoposet raw;
  raw.elements = {"0", "1", "a", "a'", "b", "b'", "c", "c'", "d", "d'"};
  raw.zero = "0";
  raw.one = "1";
  raw.complement = {{"0", "1"}, {"1", "0"}, {"a", "a'"}, {"a'", "a"}, {"b", "b'"},
                    {"b'", "b"}, {"c", "c'"}, {"c'", "c"}, {"d", "d'"}, {"d'", "d"}};
  for (const auto& e : raw.elements) {
    if (e != "0") raw.order.emplace_back("0", e);
    if (e != "1") raw.order.emplace_back(e, "1");
  }
  for (const auto& [x, y] : std::vector<std::pair<std::string, std::string>>{
           {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}) {
    raw.order.emplace_back(x, y);
    raw.order.emplace_back(raw.complement[y], raw.complement[x]);
  }
  auto result = validate_orthoposet(raw);
  REQUIRE(result.poset);
  CHECK_FALSE(result.poset->is_lattice());
  CHECK_FALSE(result.poset->join(result.poset->at("a"), result.poset->at("b")));
  CHECK_THROWS_AS(find_distributivity_violation(*result.poset), InvalidInput);
}
