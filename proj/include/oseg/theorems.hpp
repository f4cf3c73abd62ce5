// Characterization theorems as per-structure condition vectors.
//
// check(S, id) evaluates every condition of the statement on S, each
// independently of the others, and compares the values against the shape
// of the statement (a list of mutually equivalent conditions, or conditions
// that must hold).  A mismatch is a COUNTEREXAMPLE.
//
// Catalog ids:
//
//   thm-500          right pi-inverse <=> (e L* f => e R* f) on E(S)
//   thm-15           right pi-inverse <=> some power has R-related inverses
//   thm-74           eight characterizations of nil-extensions of left
//                    simple pi-inverse ordered semigroups
//   cor-76           nil-extension of simple pi-inverse <=> pi-inverse and
//                    E(S) inside one J*-class
//   lem-cao          nil-extension of an ideal I <=> every element has a
//                    power in I
//   lem-ne51         divisibility conditions on RV(S)
//   thm-ne511        RV, right inverse and right pi-inverse are determined
//                    classwise by any complete semilattice decomposition
//   lem-ne53         RV(S) and the L-classes meeting it lie in every ideal
//                    S is a nil-extension of
//   thm-1005         nine characterizations of nil-extensions of left
//                    simple right pi-inverse ordered semigroups
//   cor-simple       five characterizations of nil-extensions of simple
//                    right pi-inverse ordered semigroups
//   cor-rinv-nilext  nil-extensions of right inverse ordered semigroups
//   cor-1114         complete semilattices of nil-extensions of simple right
//                    pi-inverse ordered semigroups
//   cor-leftsimple   the left simple analogue of cor-1114
//   thm-774-adapted  t-Archimedean with Pi-Intra(S) nonempty <=>
//                    nil-extension of a t-simple ordered semigroup; adapted
//                    from a statement about ordered semigroups with a
//                    greatest element

#ifndef OSEG_THEOREMS_HPP_
#define OSEG_THEOREMS_HPP_

#include <cstddef>      // for size_t
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "core.hpp"        // for OrderedSemigroup
#include "io.hpp"          // for json
#include "regularity.hpp"  // for RvReading

namespace oseg {

  struct TheoremInfo {
    std::string_view id;
    std::string_view summary;
    bool             adapted;
    // stated for pi-regular ordered semigroups only
    bool needs_pi_regular;
    // quantifies over all ideals or all congruences, so needs a subset scan
    bool needs_scan;
  };

  //! The catalog, in the order check_all() runs it.
  [[nodiscard]] std::span<TheoremInfo const> catalog();

  //! Throws UnknownTheorem.
  [[nodiscard]] TheoremInfo const& theorem_info(std::string_view id);

  struct Condition {
    std::string name;
    bool        value;
    std::string witness;  // may be empty
  };

  struct Claim {
    enum class Shape {
      equivalent,  // all listed conditions have the same value
      holds        // the single listed condition is true
    };
    Shape                    shape;
    std::vector<std::size_t> conditions;
  };

  struct TheoremReport {
    enum class Verdict { consistent, counterexample };

    std::string            theorem_id;
    bool                   adapted = false;
    std::vector<Condition> conditions;
    std::vector<Claim>     claims;
    Verdict                verdict = Verdict::consistent;
    std::string            violation;  // empty when consistent

    [[nodiscard]] bool consistent() const noexcept {
      return verdict == Verdict::consistent;
    }
    //! Value of the named condition; throws std::out_of_range.
    [[nodiscard]] bool value(std::string_view name) const;

    [[nodiscard]] json to_json() const;
  };

  struct CheckOptions {
    RvReading reading = RvReading::nonempty;
  };

  //! Throws UnknownTheorem, and PreconditionUnmet when S is not pi-regular
  //! for a theorem stated on pi-regular structures, or is too large for a
  //! theorem that needs a subset scan.
  [[nodiscard]] TheoremReport check(OrderedSemigroup const& S,
                                    std::string_view        theorem_id,
                                    CheckOptions const&     options = {});

  //! Whether S meets the hypothesis of the theorem.
  [[nodiscard]] bool precondition_met(OrderedSemigroup const& S,
                                      TheoremInfo const&      info);

  //! Every catalog entry whose precondition S meets, in catalog order.
  [[nodiscard]] std::vector<TheoremReport>
  check_all(OrderedSemigroup const& S, CheckOptions const& options = {});

}  // namespace oseg

#endif  // OSEG_THEOREMS_HPP_
