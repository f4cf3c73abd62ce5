#include <stdexcept>

#include "doctest.h"

#include "fixtures.hpp"
#include "oracle.hpp"
#include "oseg/enumeration.hpp"
#include "oseg/exception.hpp"
#include "oseg/ideals.hpp"
#include "oseg/regularity.hpp"
#include "oseg/relations.hpp"

using oseg::ArchimedeanKind;
using oseg::GreenKind;

TEST_CASE("Green's relations of the fixtures") {
  auto const LZ2 = fixtures::LZ2();
  CHECK(oseg::green(LZ2, GreenKind::L).is_universal());
  CHECK_FALSE(oseg::green(LZ2, GreenKind::R).related(0, 1));
  CHECK_FALSE(oseg::green(LZ2, GreenKind::H).related(0, 1));
  CHECK_FALSE(oseg::green(fixtures::N2(), GreenKind::J).related(1, 0));
  for (auto kind : {GreenKind::L, GreenKind::R, GreenKind::J, GreenKind::H}) {
    CHECK(oseg::green(fixtures::T1(), kind).is_universal());
  }
  CHECK_THROWS_AS((void) oseg::green(LZ2, GreenKind::L_star), std::invalid_argument);
  CHECK_THROWS_AS((void) oseg::green_star(LZ2, GreenKind::L), std::invalid_argument);
}

TEST_CASE("starred relations of the fixtures") {
  CHECK(oseg::green_star(fixtures::N2(), GreenKind::L_star).related(1, 0));
  auto const SL2 = fixtures::SL2();
  CHECK(oseg::green_star(SL2, GreenKind::L_star).rows()
        == oseg::green(SL2, GreenKind::L).rows());
  auto const R_star = oseg::green_star(fixtures::LZ2(), GreenKind::R_star);
  CHECK_FALSE(R_star.related(0, 1));
  CHECK(R_star.related(0, 0));
}

TEST_CASE("divisibility of the fixtures") {
  for (auto const& f : fixtures::all()) {
    for (std::size_t a = 0; a < f.structure.order(); ++a) {
      CHECK(oseg::divides(f.structure, a, a));
    }
  }
  CHECK(oseg::divides(fixtures::N2(), 1, 0));
  CHECK_FALSE(oseg::divides(fixtures::SL2(), 0, 1));
}

TEST_CASE("Archimedean kinds of the fixtures") {
  auto const LZ2 = fixtures::LZ2();
  CHECK(oseg::is_archimedean(LZ2, ArchimedeanKind::l));
  CHECK_FALSE(oseg::is_archimedean(LZ2, ArchimedeanKind::r));
  CHECK_FALSE(oseg::is_archimedean(LZ2, ArchimedeanKind::t));
  CHECK(oseg::is_archimedean(LZ2, ArchimedeanKind::two_sided));
  CHECK(oseg::is_archimedean(fixtures::N2(), ArchimedeanKind::t));
  CHECK_FALSE(oseg::is_archimedean(fixtures::SL2(), ArchimedeanKind::two_sided));
}

TEST_CASE("relations agree with the oracle at order <= 3") {
  using oracle::Green;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : oseg::enumerate_ordered_semigroups(n, oseg::Dedup::raw)) {
      oracle::Naive const N(S);
      auto const          L = oseg::green(S, GreenKind::L);
      auto const          R = oseg::green(S, GreenKind::R);
      auto const          J = oseg::green(S, GreenKind::J);
      auto const          H = oseg::green(S, GreenKind::H);
      bool const          pir = oseg::is_pi_regular(S);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          int const x = static_cast<int>(a);
          int const y = static_cast<int>(b);
          REQUIRE(L.related(a, b) == oracle::green(N, Green::L, x, y));
          REQUIRE(R.related(a, b) == oracle::green(N, Green::R, x, y));
          REQUIRE(J.related(a, b) == oracle::green(N, Green::J, x, y));
          REQUIRE(H.related(a, b) == oracle::green(N, Green::H, x, y));
          REQUIRE(oseg::divides(S, a, b) == oracle::divides(N, x, y));
          // definitional cross-check against the principal ideal
          REQUIRE(oseg::divides(S, a, b)
                  == oseg::principal_ideal(S, a, oseg::IdealKind::two_sided).contains(b));
        }
      }
      if (pir) {
        for (auto [star, plain] : {std::pair{GreenKind::L_star, Green::L},
                                   std::pair{GreenKind::R_star, Green::R},
                                   std::pair{GreenKind::J_star, Green::J},
                                   std::pair{GreenKind::H_star, Green::H}}) {
          auto const rel = oseg::green_star(S, star);
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              REQUIRE(rel.related(a, b)
                      == oracle::green_star(N, plain, static_cast<int>(a), static_cast<int>(b)));
            }
          }
        }
      }
      CHECK(oseg::is_archimedean(S, ArchimedeanKind::two_sided)
            == oracle::archimedean(N, oracle::Arch::two_sided));
      CHECK(oseg::is_archimedean(S, ArchimedeanKind::l) == oracle::archimedean(N, oracle::Arch::l));
      CHECK(oseg::is_archimedean(S, ArchimedeanKind::r) == oracle::archimedean(N, oracle::Arch::r));
      CHECK(oseg::is_archimedean(S, ArchimedeanKind::t) == oracle::archimedean(N, oracle::Arch::t));
    }
  }
}

TEST_CASE("relation invariants on every structure of order <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    oseg::StructureEnumerator stream(n, oseg::Dedup::raw);
    while (auto S = stream.next()) {
      auto const L = oseg::green(*S, GreenKind::L);
      auto const R = oseg::green(*S, GreenKind::R);
      REQUIRE(oseg::green(*S, GreenKind::H).rows() == L.intersect(R, GreenKind::H).rows());
      if (oseg::is_pi_regular(*S)) {
        auto const Ls = oseg::green_star(*S, GreenKind::L_star);
        auto const Rs = oseg::green_star(*S, GreenKind::R_star);
        REQUIRE(oseg::green_star(*S, GreenKind::H_star).rows()
                == Ls.intersect(Rs, GreenKind::H_star).rows());
        auto const Reg = oseg::regular_elements(*S);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (Reg.contains(a) && Reg.contains(b) && R.related(a, b)) {
              REQUIRE(Rs.related(a, b));
            }
          }
        }
      }
      bool const t   = oseg::is_archimedean(*S, ArchimedeanKind::t);
      bool const l   = oseg::is_archimedean(*S, ArchimedeanKind::l);
      bool const r   = oseg::is_archimedean(*S, ArchimedeanKind::r);
      bool const two = oseg::is_archimedean(*S, ArchimedeanKind::two_sided);
      if (t) {
        REQUIRE(l);
        REQUIRE(r);
      }
      if (l || r) {
        REQUIRE(two);
      }
    }
  }
}

TEST_CASE("least regular exponents") {
  // a power of every element is idempotent, so NotPiRegular cannot be
  // raised by a finite structure
  auto const N2 = fixtures::N2();
  CHECK(oseg::least_regular_exponents(N2) == std::vector<std::size_t>{1, 2});
  for (auto const& f : fixtures::all()) {
    CHECK(oseg::least_regular_exponents(f.structure).size() == f.structure.order());
  }
  oseg::NotPiRegular const e(3);
  CHECK(e.element() == 3);
}
