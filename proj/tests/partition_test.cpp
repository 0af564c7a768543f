#include <doctest.h>

#include "qlogic/error.hpp"
#include "qlogic/partition.hpp"
#include "qlogic/stone.hpp"
#include "support.hpp"

using namespace qtest;

namespace {

PartitionLogic load_partitions(const std::string& file) {
  auto doc = parse_partitions(read_file(data_path(file)));
  return build_partition_logic(doc.n, doc.partitions, doc.labels);
}

}  // namespace

TEST_CASE("three-point realization of MO2") {
  auto pl = load_partitions("fig6.part");
  CHECK(pl.logic.size() == 6);
  CHECK(pl.logic == mo2());
  auto check = verify_partition_embedding(pl);
  CHECK(check.injective);
  CHECK(check.order_preserving);
  CHECK(PartitionLogic::set_name(pl.sets[pl.logic.at("p-")], 3) == "{1}");
  CHECK(PartitionLogic::set_name(pl.sets[pl.logic.at("p+")], 3) == "{2,3}");
}

TEST_CASE("four-point realization of MO2 preserves operations among co-measurable pairs") {
  auto pl = load_partitions("fig7.part");
  CHECK(pl.logic == mo2());
  auto check = verify_partition_embedding(pl);
  CHECK(check.ok());
  CHECK(check.operation_failures.empty());

  // Independent count of co-measurable pairs, then the operations by hand.
  const auto& l = pl.logic;
  std::size_t pairs = 0;
  const SetMask full = 0xF;
  for (Element p = 0; p < l.size(); ++p) {
    for (Element q = p; q < l.size(); ++q) {
      if (!co_measurable(l, p, q)) continue;
      ++pairs;
      CHECK(pl.sets[l.comp(p)] == (full & ~pl.sets[p]));
      CHECK(pl.sets[*l.join(p, q)] == (pl.sets[p] | pl.sets[q]));
      CHECK(pl.sets[*l.meet(p, q)] == (pl.sets[p] & pl.sets[q]));
    }
  }
  CHECK(check.co_measurable_pairs == pairs);
}

TEST_CASE("four-point embedding equals the maximal-ideal embedding") {
  auto pl = load_partitions("fig7.part");
  auto e = stone_embed(mo2());
  REQUIRE(e.dimension() == 4);
  for (Element x = 0; x < pl.logic.size(); ++x) {
    const auto y = mo2().at(pl.logic.name(x));
    for (std::size_t i = 0; i < 4; ++i) CHECK(e.image[y][i] == bool(pl.sets[x] >> i & 1));
  }
  auto points = point_states(pl);
  auto states = enumerate_states(pl.logic, StateRegime::morphism).states;
  CHECK(points == states);
}

TEST_CASE("single partition gives a Boolean algebra") {
  auto pl = build_partition_logic(2, {{{1}, {2}}});
  CHECK(pl.logic.size() == 4);
  CHECK(find_isomorphism(pl.logic, build_boolean(2).to_orthoposet()));
  auto check = verify_partition_embedding(pl);
  CHECK(check.ok());
  CHECK(check.co_measurable_pairs == 10);
}

TEST_CASE("three-cell partitions include unions of cells") {
  auto pl = build_partition_logic(3, {{{1}, {2}, {3}}});
  CHECK(pl.logic.size() == 8);
  auto mixed = build_partition_logic(4, {{{1}, {2}, {3, 4}}, {{1, 2}, {3}, {4}}});
  auto check = verify_partition_embedding(mixed);
  CHECK(check.injective);
  CHECK(check.order_preserving);
  for (Element x = 0; x < mixed.logic.size(); ++x) {
    CHECK(mixed.sets[mixed.logic.comp(x)] == (SetMask{0xF} & ~mixed.sets[x]));
  }
}

TEST_CASE("malformed partitions") {
  CHECK_THROWS_AS(build_partition_logic(3, {{{1, 2}, {2, 3}}}), InvalidInput);
  CHECK_THROWS_AS(build_partition_logic(3, {{{1}, {2}}}), InvalidInput);
  CHECK_THROWS_AS(build_partition_logic(3, {{{1}, {2, 4}}}), InvalidInput);
  CHECK_THROWS_AS(build_partition_logic(3, {{{1}, {2, 3}}}, {{"{9}", "x"}}), UnknownElement);
}

TEST_CASE("generated partition families") {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Partition> parts;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) {
      const int cells = 2 + static_cast<int>(rng() % 2);
      Partition part(cells);
      for (int i = 1; i <= n; ++i) part[rng() % cells].push_back(i);
      std::erase_if(part, [](const auto& c) { return c.empty(); });
      parts.push_back(part);
    }
    auto pl = build_partition_logic(n, parts);
    auto check = verify_partition_embedding(pl);
    CHECK(check.injective);
    CHECK(check.order_preserving);
    for (const auto& v : point_states(pl)) {
      CHECK(check_state(pl.logic, v.values, StateRegime::morphism).ok());
    }
  }
}
