// The five small structures the tests revolve around.
//
//   T1   trivial
//   LZ2  left zero {a=0, b=1}, xy = x, discrete order
//   RZ2  right zero {a=0, b=1}, xy = y, discrete order
//   N2   null {0, a=1}, every product 0, 0 <= a
//   SL2  {0, 1} under meet, 0 <= 1

#ifndef OSEG_TESTS_FIXTURES_HPP_
#define OSEG_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "oseg/core.hpp"

namespace fixtures {

  inline oseg::OrderedSemigroup
  make(std::size_t                                      n,
       std::vector<std::size_t>                         table,
       std::vector<std::pair<std::size_t, std::size_t>> strict = {}) {
    std::vector<bool> leq(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
      leq[i * n + i] = true;
    }
    for (auto [i, j] : strict) {
      leq[i * n + j] = true;
    }
    auto result = oseg::validate(n, std::move(table), std::move(leq));
    return std::move(*result.structure);
  }

  inline oseg::OrderedSemigroup T1() {
    return make(1, {0});
  }
  inline oseg::OrderedSemigroup LZ2() {
    return make(2, {0, 0, 1, 1});
  }
  inline oseg::OrderedSemigroup RZ2() {
    return make(2, {0, 1, 0, 1});
  }
  inline oseg::OrderedSemigroup N2() {
    return make(2, {0, 0, 0, 0}, {{0, 1}});
  }
  inline oseg::OrderedSemigroup SL2() {
    return make(2, {0, 0, 0, 1}, {{0, 1}});
  }

  struct Named {
    std::string            name;
    oseg::OrderedSemigroup structure;
  };

  inline std::vector<Named> all() {
    return {{"T1", T1()}, {"LZ2", LZ2()}, {"RZ2", RZ2()}, {"N2", N2()}, {"SL2", SL2()}};
  }

}  // namespace fixtures

#endif  // OSEG_TESTS_FIXTURES_HPP_
