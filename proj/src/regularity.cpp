#include "oseg/regularity.hpp"

#include <algorithm>  // for all_of

#include "oseg/relations.hpp"  // for green, EquivalenceRelation

namespace oseg {

  namespace {
    // (a S a]
    ElementSubset sandwich_closure(OrderedSemigroup const& S, std::size_t a) {
      ElementSubset prod(S.order());
      for (std::size_t x = 0; x < S.order(); ++x) {
        prod.insert(S.product(S.product(a, x), a));
      }
      return downset(S, prod);
    }

    // (S b S]
    ElementSubset two_sided_multiples(OrderedSemigroup const& S,
                                      std::size_t             b) {
      auto const all = S.all();
      auto const bs  = ElementSubset::singleton(S.order(), b);
      return downset(S, subset_product(S, subset_product(S, all, bs), all));
    }

    // Elements some power a^m (1 <= m <= n) of which has a nonempty (or, with
    // the vacuous reading, any) set of inverses that is pairwise related
    // under rel.  With powers = false only m = 1 is tried.
    ElementSubset related_inverse_set(OrderedSemigroup const&    S,
                                      EquivalenceRelation const& rel,
                                      bool                       powers,
                                      RvReading                  reading) {
      std::size_t const n = S.order();
      // good[x]: V(x) satisfies the condition
      std::vector<bool> good(n);
      for (std::size_t x = 0; x < n; ++x) {
        auto const v = inverses(S, x);
        good[x]      = (reading == RvReading::vacuous || !v.empty())
                  && rel.all_related(v);
      }
      ElementSubset result(n);
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t x = a;
        for (std::size_t m = 1; m <= (powers ? n : 1); ++m) {
          if (good[x]) {
            result.insert(a);
            break;
          }
          x = S.product(x, a);
        }
      }
      return result;
    }

    bool pi_inverse_with(OrderedSemigroup const& S,
                         GreenKind               kind,
                         RvReading               reading) {
      if (!is_pi_regular(S)) {
        return false;
      }
      return related_inverse_set(S, green(S, kind), true, reading).is_full();
    }
  }  // namespace

  bool is_regular(OrderedSemigroup const& S, std::size_t a) {
    return sandwich_closure(S, a).contains(a);
  }

  ElementSubset regular_elements(OrderedSemigroup const& S) {
    ElementSubset result(S.order());
    for (std::size_t a = 0; a < S.order(); ++a) {
      if (is_regular(S, a)) {
        result.insert(a);
      }
    }
    return result;
  }

  bool is_regular_semigroup(OrderedSemigroup const& S) {
    return regular_elements(S).is_full();
  }

  ElementSubset ordered_idempotents(OrderedSemigroup const& S) {
    ElementSubset result(S.order());
    for (std::size_t e = 0; e < S.order(); ++e) {
      if (S.leq(e, S.product(e, e))) {
        result.insert(e);
      }
    }
    return result;
  }

  ElementSubset inverses(OrderedSemigroup const& S, std::size_t a) {
    ElementSubset result(S.order());
    for (std::size_t b = 0; b < S.order(); ++b) {
      auto const ab = S.product(a, b);
      auto const ba = S.product(b, a);
      if (S.leq(a, S.product(ab, a)) && S.leq(b, S.product(ba, b))) {
        result.insert(b);
      }
    }
    return result;
  }

  bool RegularityProfile::pi_regular() const noexcept {
    return std::all_of(elements.begin(), elements.end(), [](auto const& x) {
      return x.pi_witness.has_value();
    });
  }

  bool RegularityProfile::intra_pi_regular() const noexcept {
    return std::all_of(elements.begin(), elements.end(), [](auto const& x) {
      return x.intra_witness.has_value();
    });
  }

  RegularityProfile regularity_profile(OrderedSemigroup const& S) {
    std::size_t const n = S.order();
    RegularityProfile result;
    result.elements.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto& entry      = result.elements[a];
      entry.is_regular = is_regular(S, a);
      std::size_t x    = a;  // a^m
      for (std::size_t m = 1; m <= n; ++m) {
        if (!entry.pi_witness && is_regular(S, x)) {
          entry.pi_witness = m;
        }
        if (!entry.intra_witness
            && two_sided_multiples(S, S.product(x, x)).contains(x)) {
          entry.intra_witness = m;
        }
        x = S.product(x, a);
      }
    }
    return result;
  }

  bool is_pi_regular(OrderedSemigroup const& S) {
    return pi_regular_set(S).is_full();
  }

  bool is_intra_pi_regular(OrderedSemigroup const& S) {
    return pi_intra_set(S).is_full();
  }

  ElementSubset pi_regular_set(OrderedSemigroup const& S) {
    auto const    reg = regular_elements(S);
    ElementSubset result(S.order());
    for (std::size_t a = 0; a < S.order(); ++a) {
      if (!(power_profile(S, a).powers & reg).empty()) {
        result.insert(a);
      }
    }
    return result;
  }

  ElementSubset pi_intra_set(OrderedSemigroup const& S) {
    ElementSubset result(S.order());
    for (std::size_t a = 0; a < S.order(); ++a) {
      std::size_t x = a;
      for (std::size_t m = 1; m <= S.order(); ++m) {
        if (two_sided_multiples(S, S.product(x, x)).contains(x)) {
          result.insert(a);
          break;
        }
        x = S.product(x, a);
      }
    }
    return result;
  }

  ElementSubset rv_set(OrderedSemigroup const& S, RvReading reading) {
    return related_inverse_set(S, green(S, GreenKind::R), false, reading);
  }

  ElementSubset pi_rv_set(OrderedSemigroup const& S, RvReading reading) {
    return related_inverse_set(S, green(S, GreenKind::R), true, reading);
  }

  bool is_right_pi_inverse(OrderedSemigroup const& S, RvReading reading) {
    return is_pi_regular(S) && pi_rv_set(S, reading).is_full();
  }

  bool is_left_pi_inverse(OrderedSemigroup const& S, RvReading reading) {
    return pi_inverse_with(S, GreenKind::L, reading);
  }

  bool is_pi_inverse(OrderedSemigroup const& S, RvReading reading) {
    return pi_inverse_with(S, GreenKind::H, reading);
  }

  bool is_right_inverse(OrderedSemigroup const& S, RvReading reading) {
    return is_regular_semigroup(S) && rv_set(S, reading).is_full();
  }

}  // namespace oseg
