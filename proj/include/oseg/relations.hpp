#ifndef OSEG_RELATIONS_HPP_
#define OSEG_RELATIONS_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

#include "core.hpp"  // for OrderedSemigroup, ElementSubset

namespace oseg {

  enum class GreenKind { L, R, J, H, L_star, R_star, J_star, H_star };

  [[nodiscard]] std::string to_string(GreenKind k);

  //! An equivalence relation on the elements, stored as one row mask per
  //! element.
  class EquivalenceRelation {
   public:
    EquivalenceRelation(GreenKind which, std::vector<std::uint64_t> rows);

    [[nodiscard]] GreenKind which() const noexcept {
      return _which;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return _rows.size();
    }
    [[nodiscard]] bool related(std::size_t a, std::size_t b) const noexcept {
      return (_rows[a] >> b) & 1U;
    }
    //! The class of a.
    [[nodiscard]] ElementSubset class_of(std::size_t a) const {
      return ElementSubset(_rows.size(), _rows[a]);
    }
    //! Classes ordered by least member.
    [[nodiscard]] std::vector<ElementSubset> classes() const;

    //! Every pair of members of A is related.
    [[nodiscard]] bool all_related(ElementSubset const& A) const;

    [[nodiscard]] bool is_universal() const;

    //! Pointwise intersection; which() is taken from the argument tag.
    [[nodiscard]] EquivalenceRelation
    intersect(EquivalenceRelation const& other, GreenKind which) const;

    [[nodiscard]] std::vector<std::uint64_t> const& rows() const noexcept {
      return _rows;
    }

    friend bool operator==(EquivalenceRelation const& x,
                           EquivalenceRelation const& y) {
      return x._rows == y._rows;
    }

   private:
    GreenKind                  _which;
    std::vector<std::uint64_t> _rows;
  };

  //! L, R, J or H.  Throws std::invalid_argument for a starred kind.
  [[nodiscard]] EquivalenceRelation green(OrderedSemigroup const& S,
                                          GreenKind               which);

  //! a X* b iff a^m X b^k where a^m and b^k are the least regular powers.
  //! Throws NotPiRegular when some element has no regular power, and
  //! std::invalid_argument for an unstarred kind.
  [[nodiscard]] EquivalenceRelation green_star(OrderedSemigroup const& S,
                                               GreenKind               which);

  //! The least m with a^m regular, per element.  Throws NotPiRegular.
  [[nodiscard]] std::vector<std::size_t>
  least_regular_exponents(OrderedSemigroup const& S);

  //! a | b: b <= xay for some x, y in S^1.
  [[nodiscard]] bool divides(OrderedSemigroup const& S,
                             std::size_t             a,
                             std::size_t             b);

  enum class ArchimedeanKind { two_sided, l, r, t };

  //! For all a, b some b^m lies in (SaS], (Sa], (aS] or (aSa] respectively.
  [[nodiscard]] bool is_archimedean(OrderedSemigroup const& S,
                                    ArchimedeanKind         kind);

}  // namespace oseg

#endif  // OSEG_RELATIONS_HPP_
