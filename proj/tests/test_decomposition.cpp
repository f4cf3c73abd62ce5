#include <set>
#include <string>

#include "doctest.h"

#include "fixtures.hpp"
#include "oracle.hpp"
#include "oseg/decomposition.hpp"
#include "oseg/enumeration.hpp"
#include "oseg/exception.hpp"
#include "oseg/ideals.hpp"
#include "oseg/regularity.hpp"
#include "oseg/relations.hpp"

using oseg::ElementSubset;
using oseg::Partition;
using oseg::TypePredicate;

namespace {

  TypePredicate const simple_t{"simple", [](auto const& T) {
                                 return oseg::is_simple(T, oseg::SimplicityKind::two_sided);
                               }};
  TypePredicate const left_simple_t{"left-simple", [](auto const& T) {
                                      return oseg::is_simple(T, oseg::SimplicityKind::left);
                                    }};
  TypePredicate const t_simple_t{"t-simple", [](auto const& T) {
                                   return oseg::is_simple(T, oseg::SimplicityKind::t);
                                 }};
  TypePredicate const rpi_t{"right-pi-inverse",
                            [](auto const& T) { return oseg::is_right_pi_inverse(T); }};
  TypePredicate const arch_t{"archimedean", [](auto const& T) {
                               return oseg::is_archimedean(T, oseg::ArchimedeanKind::two_sided);
                             }};

  std::vector<int> to_labels(Partition const& p) {
    return {p.labels().begin(), p.labels().end()};
  }

}  // namespace

TEST_CASE("Partition") {
  Partition const p({5, 5, 2, 5});
  CHECK(p.labels() == std::vector<std::size_t>{0, 0, 1, 0});
  CHECK(p.class_count() == 2);
  CHECK(p.related(0, 3));
  CHECK_FALSE(p.related(0, 2));
  CHECK(p.to_string() == "{{0,1,3},{2}}");
  CHECK(Partition({0, 1, 2, 3}).refines(p));
  CHECK_FALSE(p.refines(Partition({0, 1, 2, 3})));
  CHECK(oseg::all_partitions(4).size() == 15);
  CHECK(oseg::all_partitions(6).size() == 203);
  CHECK_THROWS_AS((void) oseg::all_partitions(7), oseg::OrderTooLarge);
}

TEST_CASE("nil-extensions of the fixtures") {
  auto const N2 = fixtures::N2();
  auto const r  = oseg::is_nil_extension(N2, ElementSubset::singleton(2, 0));
  CHECK(r.holds);
  CHECK(r.exponents[0] == 1);
  CHECK(r.exponents[1] == 2);
  CHECK_FALSE(oseg::is_nil_extension(fixtures::SL2(), ElementSubset::singleton(2, 0)).holds);
  for (auto const& f : fixtures::all()) {
    CHECK(oseg::is_nil_extension(f.structure, f.structure.all()).holds);
    CHECK_FALSE(oseg::is_nil_extension(f.structure, ElementSubset(f.structure.order())).holds);
  }

  auto const found = oseg::nil_extension_of_type(N2, t_simple_t && rpi_t);
  CHECK(found.found());
  CHECK(found.ideal == ElementSubset::singleton(2, 0));

  auto const rz2 = oseg::nil_extension_of_type(fixtures::RZ2(), left_simple_t);
  CHECK(rz2.outcome == oseg::NilExtensionOfType::Outcome::type_fails);

  auto const lz2 = oseg::nil_extension_of_type(fixtures::LZ2(), simple_t);
  CHECK(lz2.found());
  CHECK(lz2.ideal == ElementSubset::all(2));

  auto const sl2 = oseg::nil_extension_of_type(fixtures::SL2(), simple_t);
  CHECK(sl2.outcome == oseg::NilExtensionOfType::Outcome::kernel_not_nil);

  CHECK((t_simple_t && rpi_t).name == "t-simple & right-pi-inverse");
  CHECK(oseg::nil_extension_type(simple_t).name == "nil-ext-of(simple)");
}

TEST_CASE("least complete semilattice congruence of the fixtures") {
  CHECK(oseg::least_complete_semilattice_congruence(fixtures::LZ2()).partition
        == Partition({0, 0}));
  auto const sl2 = oseg::least_complete_semilattice_congruence(fixtures::SL2());
  CHECK(sl2.partition == Partition({0, 1}));
  // {0} is below {1} in the induced semilattice
  CHECK(sl2.class_order[0 * 2 + 1]);
  CHECK_FALSE(sl2.class_order[1 * 2 + 0]);
  CHECK(oseg::least_complete_semilattice_congruence(fixtures::N2()).partition
        == Partition({0, 0}));
}

TEST_CASE("all complete semilattice congruences of the fixtures") {
  auto const t1 = oseg::all_complete_semilattice_congruences(fixtures::T1());
  REQUIRE(t1.size() == 1);

  auto const sl2 = oseg::all_complete_semilattice_congruences(fixtures::SL2());
  REQUIRE(sl2.size() == 2);
  std::set<std::string> names;
  for (auto const& rho : sl2) {
    names.insert(rho.partition.to_string());
  }
  CHECK(names == std::set<std::string>{"{{0},{1}}", "{{0,1}}"});

  auto const lz2 = oseg::all_complete_semilattice_congruences(fixtures::LZ2());
  REQUIRE(lz2.size() == 1);
  CHECK(lz2[0].partition.to_string() == "{{0,1}}");
}

TEST_CASE("complete semilattices of a type, fixtures") {
  auto const sl2 = oseg::is_complete_semilattice_of(
      fixtures::SL2(), oseg::nil_extension_type(t_simple_t && rpi_t));
  CHECK(sl2.holds);
  REQUIRE(sl2.witness);
  CHECK(sl2.witness->partition.to_string() == "{{0},{1}}");

  auto const lz2 = oseg::is_complete_semilattice_of(fixtures::LZ2(), arch_t);
  CHECK(lz2.holds);
  REQUIRE(lz2.witness);
  CHECK(lz2.witness->partition.to_string() == "{{0,1}}");

  CHECK_FALSE(oseg::is_complete_semilattice_of(fixtures::LZ2(), rpi_t).holds);
}

TEST_CASE("the two complete-semilattice checkers agree with each other and the oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const partitions = oseg::all_partitions(n);
    for (auto const& S : oseg::enumerate_ordered_semigroups(n, oseg::Dedup::raw)) {
      oracle::Naive const N(S);
      for (auto const& p : partitions) {
        bool const congruence = oseg::is_complete_semilattice_congruence(S, p);
        REQUIRE(congruence == oseg::is_complete_semilattice_decomposition(S, p));
        REQUIRE(congruence == oracle::complete_semilattice_congruence(N, to_labels(p)));
      }
    }
  }
}

TEST_CASE("congruence invariants at order <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    oseg::StructureEnumerator stream(n, oseg::Dedup::raw);
    while (auto S = stream.next()) {
      auto const least = oseg::least_complete_semilattice_congruence(*S);
      REQUIRE(oseg::is_complete_semilattice_congruence(*S, least.partition));
      auto const all = oseg::all_complete_semilattice_congruences(*S);
      REQUIRE(!all.empty());
      for (auto const& rho : all) {
        REQUIRE(least.partition.refines(rho.partition));
        for (auto const& c : rho.partition.classes()) {
          REQUIRE(oseg::subset_product(*S, c, c).subset_of(c));
        }
      }
    }
  }
}

TEST_CASE("the kernel shortcut for nil-extensions matches an all-ideal scan") {
  struct Case {
    TypePredicate lib;
    oracle::Type  naive;
  };
  std::vector<Case> const cases{
      {left_simple_t && rpi_t,
       [](oracle::Naive const& K) {
         return oracle::simple(K, oracle::Side::left) && oracle::right_pi_inverse(K);
       }},
      {t_simple_t && rpi_t,
       [](oracle::Naive const& K) { return oracle::t_simple(K) && oracle::right_pi_inverse(K); }},
      {simple_t && rpi_t,
       [](oracle::Naive const& K) {
         return oracle::simple(K, oracle::Side::both) && oracle::right_pi_inverse(K);
       }},
      {simple_t, [](oracle::Naive const& K) { return oracle::simple(K, oracle::Side::both); }},
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : oseg::enumerate_ordered_semigroups(n, oseg::Dedup::raw)) {
      oracle::Naive const N(S);
      for (auto const& c : cases) {
        CAPTURE(c.lib.name);
        REQUIRE(oseg::nil_extension_of_type(S, c.lib).found()
                == oracle::nil_extension_of(N, c.naive));
      }
    }
  }
}

TEST_CASE("complete semilattice of a type agrees with the oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : oseg::enumerate_ordered_semigroups(n, oseg::Dedup::raw)) {
      oracle::Naive const N(S);
      CHECK(oseg::is_complete_semilattice_of(S, arch_t).holds
            == oracle::complete_semilattice_of(N, [](oracle::Naive const& C) {
                 return oracle::archimedean(C, oracle::Arch::two_sided);
               }));
      CHECK(oseg::is_complete_semilattice_of(S, rpi_t).holds
            == oracle::complete_semilattice_of(N, oracle::right_pi_inverse));
    }
  }
}

TEST_CASE("scans refuse large structures unless asked for the least congruence only") {
  std::vector<std::size_t> table(7 * 7, 0);
  std::vector<bool>        leq(7 * 7, false);
  for (std::size_t i = 0; i < 7; ++i) {
    leq[i * 7 + i] = true;
  }
  auto const S = *oseg::validate(7, table, leq).structure;
  CHECK_THROWS_AS((void) oseg::all_complete_semilattice_congruences(S), oseg::OrderTooLarge);
  // the null semigroup is Archimedean, so the least congruence already works
  auto const r = oseg::is_complete_semilattice_of(S, arch_t, true);
  CHECK(r.holds);
  auto const fail = oseg::is_complete_semilattice_of(S, simple_t, true);
  CHECK_FALSE(fail.holds);
  CHECK_FALSE(fail.exhaustive);
  CHECK_THROWS_AS((void) oseg::is_complete_semilattice_of(S, simple_t), oseg::OrderTooLarge);
}
