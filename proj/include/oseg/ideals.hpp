#ifndef OSEG_IDEALS_HPP_
#define OSEG_IDEALS_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "core.hpp"  // for OrderedSemigroup, ElementSubset

namespace oseg {

  enum class IdealKind { left, right, two_sided, bi };

  //! Kinds of simplicity; t means both left and right simple.
  enum class SimplicityKind { left, right, two_sided, t };

  //! Largest order on which subset scans (all ideals, all partitions) are
  //! allowed.
  constexpr std::size_t max_scan_order = 6;

  //! L(a) = (a u Sa], R(a) = (a u aS], I(a) = (a u Sa u aS u SaS],
  //! B(a) = (a u aSa]
  [[nodiscard]] ElementSubset principal_ideal(OrderedSemigroup const& S,
                                              std::size_t             a,
                                              IdealKind               kind);

  //! Whether A absorbs multiplication on the side(s) of the kind and is
  //! downward closed.  For bi, the absorption condition is ASA contained in
  //! A (no subsemigroup requirement, so that B(a) is the least bi-ideal
  //! containing a).  Throws EmptySubset if A is empty.
  [[nodiscard]] bool is_ideal(OrderedSemigroup const& S,
                              ElementSubset const&    A,
                              IdealKind               kind);

  [[nodiscard]] bool is_simple(OrderedSemigroup const& S, SimplicityKind kind);

  //! The least two-sided ideal: the intersection of all principal ideals.
  [[nodiscard]] ElementSubset kernel(OrderedSemigroup const& S);

  //! Every two-sided ideal of S, in increasing mask order.  Throws
  //! OrderTooLarge above max_scan_order.
  [[nodiscard]] std::vector<ElementSubset>
  all_ideals(OrderedSemigroup const& S);

  //! The substructure induced on a closed subset, with inherited order.
  struct Restriction {
    OrderedSemigroup         structure;
    std::vector<std::size_t> to_parent;    // sub index -> parent index
    std::vector<std::size_t> from_parent;  // parent index -> sub index or npos

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    //! Maps a subset of the substructure into the parent.
    [[nodiscard]] ElementSubset lift(ElementSubset const& A) const;
  };

  //! Throws EmptySubset if K is empty and NotClosed if K*K leaves K.
  [[nodiscard]] Restriction restrict(OrderedSemigroup const& S,
                                     ElementSubset const&    K);

}  // namespace oseg

#endif  // OSEG_IDEALS_HPP_
