#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"

#include "fixtures.hpp"
#include "oracle.hpp"
#include "oseg/enumeration.hpp"
#include "oseg/exception.hpp"
#include "oseg/io.hpp"

namespace {

  std::size_t count_tables(std::size_t n) {
    oseg::TableEnumerator tables(n);
    std::size_t           count = 0;
    while (tables.next()) {
      ++count;
    }
    return count;
  }

  oseg::OrderedSemigroup relabel(oseg::OrderedSemigroup const& S,
                                 std::vector<std::size_t> const& perm) {
    auto const               n = S.order();
    std::vector<std::size_t> table(n * n);
    std::vector<bool>        leq(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[perm[i] * n + perm[j]] = perm[S.product(i, j)];
        leq[perm[i] * n + perm[j]]   = S.leq(i, j);
      }
    }
    return *oseg::validate(n, table, leq).structure;
  }

}  // namespace

TEST_CASE("associative table counts") {
  CHECK(count_tables(1) == 1);
  CHECK(count_tables(2) == 8);
  CHECK(count_tables(3) == 113);
  CHECK(count_tables(4) == 3492);
  // the naive filter oracle
  CHECK(oracle::associative_tables(1).size() == 1);
  CHECK(oracle::associative_tables(2).size() == 8);
  CHECK(oracle::associative_tables(3).size() == 113);
}

TEST_CASE("tables come out in lexicographic order and associative") {
  oseg::TableEnumerator          tables(3);
  std::vector<oseg::element_type> previous;
  while (tables.next()) {
    auto const t = tables.table();
    CHECK(previous < t);
    previous = t;
  }
  CHECK_THROWS_AS(oseg::TableEnumerator(6), oseg::OrderTooLarge);
  CHECK_THROWS_AS(oseg::TableEnumerator(0), std::invalid_argument);
}

TEST_CASE("compatible orders") {
  auto const lz2 = oseg::enumerate_compatible_orders(2, {0, 0, 1, 1});
  CHECK(lz2.size() == 3);
  CHECK(lz2.front() == std::vector<bool>{true, false, false, true});

  auto const sl2 = oseg::enumerate_compatible_orders(2, {0, 0, 0, 1});
  CHECK(std::find(sl2.begin(), sl2.end(), std::vector<bool>{true, true, false, true})
        != sl2.end());

  // against a filter over every relation at order 3
  oseg::TableEnumerator tables(3);
  while (tables.next()) {
    auto const t      = tables.table();
    auto const orders = oseg::enumerate_compatible_orders(3, t);
    std::set<std::vector<bool>> distinct(orders.begin(), orders.end());
    REQUIRE(distinct.size() == orders.size());
    std::size_t naive = 0;
    for (unsigned bits = 0; bits < 512; ++bits) {
      std::vector<std::vector<bool>> le(3, std::vector<bool>(3));
      std::vector<bool>              flat(9);
      for (int c = 0; c < 9; ++c) {
        le[c / 3][c % 3] = flat[c] = (bits >> c) & 1U;
      }
      std::vector<std::vector<int>> mul(3, std::vector<int>(3));
      for (int c = 0; c < 9; ++c) {
        mul[c / 3][c % 3] = t[c];
      }
      if (oracle::valid(oracle::Naive(3, mul, le))) {
        ++naive;
        REQUIRE(distinct.count(flat) == 1);
      }
    }
    REQUIRE(naive == orders.size());
  }
}

TEST_CASE("ordered semigroup counts match the naive oracle") {
  CHECK(oseg::enumerate_ordered_semigroups(1, oseg::Dedup::raw).size() == 1);
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    auto const raw = oseg::enumerate_ordered_semigroups(n, oseg::Dedup::raw);
    CHECK(raw.size() == oracle::ordered_count(n));
    CHECK(oseg::enumerate_ordered_semigroups(n, oseg::Dedup::iso).size() <= raw.size());
  }
}

TEST_CASE("emitted structures are valid and distinct") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto dedup : {oseg::Dedup::raw, oseg::Dedup::iso}) {
      std::set<std::string> seen;
      std::set<std::string> canonical;
      auto const            all = oseg::enumerate_ordered_semigroups(n, dedup);
      for (auto const& S : all) {
        REQUIRE(oracle::valid(oracle::Naive(S)));
        REQUIRE(seen.insert(oseg::to_json(S)).second);
        canonical.insert(oseg::to_json(oseg::canonical_form(S)));
        if (dedup == oseg::Dedup::iso) {
          REQUIRE(oseg::canonical_form(S) == S);
        }
      }
      if (dedup == oseg::Dedup::iso) {
        CHECK(canonical.size() == all.size());
      } else {
        CHECK(canonical.size()
              == oseg::enumerate_ordered_semigroups(n, oseg::Dedup::iso).size());
      }
    }
  }
}

TEST_CASE("canonical form") {
  auto const T1 = fixtures::T1();
  CHECK(oseg::canonical_form(T1) == T1);
  auto const LZ2 = fixtures::LZ2();
  CHECK(oseg::canonical_form(relabel(LZ2, {1, 0})) == oseg::canonical_form(LZ2));
  CHECK_FALSE(oseg::canonical_form(LZ2) == oseg::canonical_form(fixtures::RZ2()));

  std::mt19937 rng(7);
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const all = oseg::enumerate_ordered_semigroups(n, oseg::Dedup::iso);
    for (std::size_t k = 0; k < 200; ++k) {
      auto const&              S = all[rng() % all.size()];
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto const c = oseg::canonical_form(S);
      REQUIRE(oseg::canonical_form(c) == c);
      REQUIRE(oseg::canonical_form(relabel(S, perm)) == c);
    }
  }
}

TEST_CASE("the stream resumes from a serialized cursor") {
  for (auto dedup : {oseg::Dedup::raw, oseg::Dedup::iso}) {
    auto const all = oseg::enumerate_ordered_semigroups(3, dedup);
    for (std::size_t stop : {std::size_t(0), std::size_t(1), std::size_t(57), all.size() / 2,
                             all.size() - 1, all.size()}) {
      oseg::StructureEnumerator fresh(3, dedup);
      for (std::size_t i = 0; i < stop; ++i) {
        REQUIRE(fresh.next());
      }
      auto const cursor = fresh.cursor();
      CHECK(cursor.emitted == stop);
      auto const text    = cursor.to_json().dump();
      auto const decoded = oseg::EnumerationCursor::from_json(oseg::json::parse(text));
      CHECK(decoded == cursor);
      oseg::StructureEnumerator resumed(decoded);
      for (std::size_t i = stop; i < all.size(); ++i) {
        auto S = resumed.next();
        REQUIRE(S);
        REQUIRE(*S == all[i]);
      }
      CHECK_FALSE(resumed.next());
      CHECK(resumed.cursor().finished);
    }
  }
}

TEST_CASE("cursor JSON") {
  oseg::StructureEnumerator stream(2, oseg::Dedup::raw);
  (void) stream.next();
  auto const j = stream.cursor().to_json();
  CHECK(j.contains("order"));
  CHECK(j.contains("dedup"));
  CHECK(j.contains("prefix-stack"));
  CHECK(j.contains("emitted"));
  CHECK_THROWS_AS(oseg::EnumerationCursor::from_json(oseg::json::parse("{\"order\":9}")),
                  oseg::ParseError);
  CHECK_THROWS_AS(oseg::EnumerationCursor::from_json(oseg::json::parse("[]")), oseg::ParseError);
  CHECK(oseg::dedup_from_string("iso") == oseg::Dedup::iso);
  CHECK(oseg::to_string(oseg::Dedup::raw) == "raw");
  CHECK_THROWS_AS((void) oseg::dedup_from_string("anti"), std::invalid_argument);
}
