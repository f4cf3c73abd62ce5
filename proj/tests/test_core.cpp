#include <random>
#include <stdexcept>
#include <variant>

#include "doctest.h"

#include "fixtures.hpp"
#include "oracle.hpp"
#include "oseg/core.hpp"
#include "oseg/enumeration.hpp"

using oseg::ElementSubset;

namespace {

  oseg::ValidationResult
  validate_bits(std::size_t n, std::vector<std::size_t> const& table, unsigned leq_bits) {
    std::vector<bool> leq(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      leq[i] = (leq_bits >> i) & 1U;
    }
    return oseg::validate(n, table, leq);
  }

  oracle::Naive naive_of(std::size_t n, std::vector<std::size_t> const& table, unsigned leq_bits) {
    oracle::Naive S;
    S.n = static_cast<int>(n);
    S.mul.assign(n, std::vector<int>(n));
    S.le.assign(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        S.mul[i][j] = static_cast<int>(table[i * n + j]);
        S.le[i][j]  = (leq_bits >> (i * n + j)) & 1U;
      }
    }
    return S;
  }

  std::vector<std::size_t> table_from_index(std::size_t n, std::size_t index) {
    std::vector<std::size_t> table(n * n);
    for (auto& x : table) {
      x = index % n;
      index /= n;
    }
    return table;
  }

}  // namespace

TEST_CASE("ElementSubset basics") {
  auto A = ElementSubset::of(5, {0, 2, 4});
  CHECK(A.size() == 3);
  CHECK(A.contains(2));
  CHECK_FALSE(A.contains(1));
  CHECK(A.first() == 0);
  CHECK(A.to_string() == "{0,2,4}");
  CHECK(A.elements() == std::vector<std::size_t>{0, 2, 4});
  CHECK(A.subset_of(ElementSubset::all(5)));
  CHECK_FALSE(ElementSubset::all(5).subset_of(A));
  CHECK((A | ElementSubset::singleton(5, 1)).size() == 4);
  CHECK((A & ElementSubset::of(5, {2, 3})) == ElementSubset::singleton(5, 2));
  CHECK(ElementSubset(5).empty());
  CHECK(ElementSubset(5).first() == 5);
  CHECK(ElementSubset::all(64).size() == 64);
  CHECK(ElementSubset::all(64).is_full());
}

TEST_CASE("validate accepts the fixtures") {
  CHECK(oseg::validate(1, {0}, {true}).valid());
  CHECK(oseg::validate(2, {0, 0, 1, 1}, {true, false, false, true}).valid());
  for (auto const& f : fixtures::all()) {
    CAPTURE(f.name);
    CHECK(oracle::valid(oracle::Naive(f.structure)));
  }
}

TEST_CASE("validate reports every violated axiom family") {
  SUBCASE("non-associative table") {
    // 0*0 = 1, everything else 0: (0*0)*1 = 0 but 0*(0*1) = 1
    auto r = oseg::validate(2, {1, 0, 0, 0}, {true, false, false, true});
    REQUIRE_FALSE(r.valid());
    CHECK_FALSE(r.structure.has_value());
    auto const* v = std::get_if<oseg::NotAssociative>(&r.violations.front());
    REQUIRE(v != nullptr);
    oracle::Naive S(2, {{1, 0}, {0, 0}}, {{true, false}, {false, true}});
    CHECK(S(S(v->i, v->j), v->k) != S(v->i, S(v->j, v->k)));
    CHECK(oseg::to_string(r.violations.front()).rfind("NotAssociative(", 0) == 0);
  }
  SUBCASE("incompatible order") {
    // Z2 with identity 0 and 0 <= 1: 1*0 = 1 but 1*1 = 0
    auto r = oseg::validate(2, {0, 1, 1, 0}, {true, true, false, true});
    REQUIRE_FALSE(r.valid());
    bool found = false;
    for (auto const& v : r.violations) {
      if (auto const* c = std::get_if<oseg::NotCompatible>(&v)) {
        found = true;
        CHECK(c->a == 0);
        CHECK(c->b == 1);
        CHECK(c->x == 1);
      }
    }
    CHECK(found);
  }
  SUBCASE("order axioms") {
    auto r = oseg::validate(2, {0, 0, 0, 0}, {false, true, true, true});
    REQUIRE_FALSE(r.valid());
    bool reflexivity = false;
    bool antisymmetry = false;
    for (auto const& v : r.violations) {
      if (auto const* p = std::get_if<oseg::NotPartialOrder>(&v)) {
        reflexivity |= p->axiom == oseg::NotPartialOrder::Axiom::reflexivity;
        antisymmetry |= p->axiom == oseg::NotPartialOrder::Axiom::antisymmetry;
      }
    }
    CHECK(reflexivity);
    CHECK(antisymmetry);
  }
  SUBCASE("malformed shapes throw") {
    CHECK_THROWS_AS((void) oseg::validate(0, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS((void) oseg::validate(2, {0, 0, 0}, {true, false, false, true}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void) oseg::validate(2, {0, 0, 0, 2}, {true, false, false, true}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void) oseg::validate(65, std::vector<std::size_t>(65 * 65, 0),
                                          std::vector<bool>(65 * 65, true)),
                    std::invalid_argument);
  }
}

TEST_CASE("validate agrees with the triple-loop oracle") {
  SUBCASE("every table and relation at order 2") {
    for (std::size_t t = 0; t < 16; ++t) {
      auto const table = table_from_index(2, t);
      for (unsigned bits = 0; bits < 16; ++bits) {
        CHECK(validate_bits(2, table, bits).valid()
              == oracle::valid(naive_of(2, table, bits)));
      }
    }
  }
  SUBCASE("every table at order 3 against sampled relations") {
    std::mt19937 rng(20261017);
    for (std::size_t t = 0; t < 19683; ++t) {
      auto const table = table_from_index(3, t);
      // discrete order, then one random relation per table
      unsigned const discrete = 0b100010001;
      unsigned const random   = rng() & 0x1FF;
      CHECK(validate_bits(3, table, discrete).valid()
            == oracle::valid(naive_of(3, table, discrete)));
      CHECK(validate_bits(3, table, random | discrete).valid()
            == oracle::valid(naive_of(3, table, random | discrete)));
    }
  }
}

TEST_CASE("downset") {
  auto const N2 = fixtures::N2();
  CHECK(oseg::downset(N2, ElementSubset::singleton(2, 1)) == ElementSubset::all(2));
  CHECK(oseg::downset(N2, ElementSubset(2)).empty());
  auto const LZ2 = fixtures::LZ2();
  CHECK(oseg::downset(LZ2, ElementSubset::singleton(2, 0)) == ElementSubset::singleton(2, 0));
}

TEST_CASE("downset is a closure operator") {
  for (auto const& f : fixtures::all()) {
    auto const& S = f.structure;
    auto const  n = S.order();
    for (std::uint64_t a = 0; a < (1U << n); ++a) {
      ElementSubset const A(n, a);
      auto const          dA = oseg::downset(S, A);
      CHECK(A.subset_of(dA));
      CHECK(oseg::downset(S, dA) == dA);
      for (std::uint64_t b = 0; b < (1U << n); ++b) {
        ElementSubset const B(n, b);
        if (A.subset_of(B)) {
          CHECK(dA.subset_of(oseg::downset(S, B)));
        }
      }
    }
  }
}

TEST_CASE("subset_product") {
  auto const LZ2 = fixtures::LZ2();
  CHECK(oseg::subset_product(LZ2, ElementSubset::all(2), ElementSubset::singleton(2, 0))
        == ElementSubset::all(2));
  auto const N2 = fixtures::N2();
  CHECK(oseg::subset_product(N2, ElementSubset::all(2), ElementSubset::all(2))
        == ElementSubset::singleton(2, 0));
  CHECK(oseg::subset_product(N2, ElementSubset(2), ElementSubset::all(2)).empty());
}

TEST_CASE("subset_product is associative at order <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : oseg::enumerate_ordered_semigroups(n, oseg::Dedup::iso)) {
      std::uint64_t const full = (1U << n);
      for (std::uint64_t a = 0; a < full; ++a) {
        for (std::uint64_t b = 0; b < full; ++b) {
          for (std::uint64_t c = 0; c < full; ++c) {
            ElementSubset const A(n, a), B(n, b), C(n, c);
            REQUIRE(oseg::subset_product(S, oseg::subset_product(S, A, B), C)
                    == oseg::subset_product(S, A, oseg::subset_product(S, B, C)));
          }
        }
      }
    }
  }
}

TEST_CASE("power and power_profile") {
  auto const N2 = fixtures::N2();
  CHECK(oseg::power(N2, 1, 2) == 0);
  auto const p = oseg::power_profile(N2, 1);
  CHECK(p.index == 2);
  CHECK(p.period == 1);
  CHECK(p.powers == ElementSubset::all(2));
  auto const SL2 = fixtures::SL2();
  for (std::size_t m = 1; m < 8; ++m) {
    CHECK(oseg::power(SL2, 1, m) == 1);
  }
  CHECK(oseg::power(fixtures::LZ2(), 0, 5) == 0);
  CHECK_THROWS((void) oseg::power(N2, 1, 0));
}

TEST_CASE("power_profile bounds at order <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    oseg::StructureEnumerator stream(n, oseg::Dedup::raw);
    while (auto S = stream.next()) {
      for (std::size_t a = 0; a < n; ++a) {
        auto const p = oseg::power_profile(*S, a);
        REQUIRE(p.index + p.period - 1 <= n);
        REQUIRE(p.powers.size() == p.index + p.period - 1);
        REQUIRE(oseg::power(*S, a, p.index + p.period) == oseg::power(*S, a, p.index));
      }
    }
  }
}

TEST_CASE("adjoin_identity") {
  auto const T1 = oseg::adjoin_identity(fixtures::T1());
  CHECK(T1.monoid.order() == 2);
  CHECK(T1.monoid.product(T1.identity, 0) == 0);

  auto const LZ2 = oseg::adjoin_identity(fixtures::LZ2());
  CHECK(LZ2.monoid.order() == 3);
  CHECK(LZ2.monoid.product(0, LZ2.identity) == 0);

  auto const N2 = oseg::adjoin_identity(fixtures::N2());
  CHECK_FALSE(N2.monoid.leq(N2.identity, 1));
  CHECK_FALSE(N2.monoid.leq(1, N2.identity));
  CHECK(N2.monoid.leq(0, 1));
  CHECK(oracle::valid(oracle::Naive(N2.monoid)));

  for (auto const& f : fixtures::all()) {
    auto const  ext = oseg::adjoin_identity(f.structure);
    auto const& S   = f.structure;
    for (std::size_t i = 0; i < S.order(); ++i) {
      for (std::size_t j = 0; j < S.order(); ++j) {
        CHECK(ext.monoid.product(i, j) == S.product(i, j));
        CHECK(ext.monoid.leq(i, j) == S.leq(i, j));
      }
    }
  }
}
