// Regular elements, ordered inverses and ordered idempotents, and the
// pi-regular / inverse-type properties built on them.
//
// Every existential exponent "there is m" is searched over m = 1..n: the
// distinct powers of an element all occur among a, a^2, ..., a^n.

#ifndef OSEG_REGULARITY_HPP_
#define OSEG_REGULARITY_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "core.hpp"  // for OrderedSemigroup, ElementSubset

namespace oseg {

  //! How an element with no ordered inverses is treated in RV(S) and
  //! Pi-RV(S).  With nonempty, a member must have at least one inverse;
  //! with vacuous, "any two inverses are R-related" is allowed to hold
  //! vacuously.
  enum class RvReading { nonempty, vacuous };

  //! a is in (aSa]
  [[nodiscard]] bool is_regular(OrderedSemigroup const& S, std::size_t a);

  //! Reg(S)
  [[nodiscard]] ElementSubset regular_elements(OrderedSemigroup const& S);

  //! Every element is regular.
  [[nodiscard]] bool is_regular_semigroup(OrderedSemigroup const& S);

  //! E(S) = {e : e <= e^2}
  [[nodiscard]] ElementSubset ordered_idempotents(OrderedSemigroup const& S);

  //! V(a) = {b : a <= aba and b <= bab}
  [[nodiscard]] ElementSubset inverses(OrderedSemigroup const& S,
                                       std::size_t             a);

  struct ElementRegularity {
    bool is_regular;
    // least m with a^m in (a^m S a^m]
    std::optional<std::size_t> pi_witness;
    // least m with a^m in (S a^2m S]
    std::optional<std::size_t> intra_witness;
  };

  struct RegularityProfile {
    std::vector<ElementRegularity> elements;

    [[nodiscard]] bool pi_regular() const noexcept;
    [[nodiscard]] bool intra_pi_regular() const noexcept;
  };

  [[nodiscard]] RegularityProfile regularity_profile(OrderedSemigroup const& S);

  [[nodiscard]] bool is_pi_regular(OrderedSemigroup const& S);
  [[nodiscard]] bool is_intra_pi_regular(OrderedSemigroup const& S);

  //! Pi-Reg(S): elements having a regular power.
  [[nodiscard]] ElementSubset pi_regular_set(OrderedSemigroup const& S);

  //! Pi-Intra(S): elements a with a^m in (S a^2m S] for some m.
  [[nodiscard]] ElementSubset pi_intra_set(OrderedSemigroup const& S);

  //! RV(S): elements whose ordered inverses are pairwise R-related.
  [[nodiscard]] ElementSubset rv_set(OrderedSemigroup const& S,
                                     RvReading reading = RvReading::nonempty);

  //! Pi-RV(S): elements with a power whose ordered inverses are pairwise
  //! R-related.
  [[nodiscard]] ElementSubset
  pi_rv_set(OrderedSemigroup const& S, RvReading reading = RvReading::nonempty);

  //! pi-regular, and for every a some a^m has its inverses pairwise
  //! R-related (L-related, H-related for the left and two-sided variants).
  [[nodiscard]] bool is_right_pi_inverse(OrderedSemigroup const& S,
                                         RvReading reading = RvReading::nonempty);
  [[nodiscard]] bool is_left_pi_inverse(OrderedSemigroup const& S,
                                        RvReading reading = RvReading::nonempty);
  [[nodiscard]] bool is_pi_inverse(OrderedSemigroup const& S,
                                   RvReading reading = RvReading::nonempty);

  //! Every element is regular and RV(S) = S.
  [[nodiscard]] bool is_right_inverse(OrderedSemigroup const& S,
                                      RvReading reading = RvReading::nonempty);

}  // namespace oseg

#endif  // OSEG_REGULARITY_HPP_
