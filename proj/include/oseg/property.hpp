// Boolean property expressions over ordered semigroups.
//
//   expr    := conj ('|' conj)*
//   conj    := unary ('&' unary)*
//   unary   := '!' unary | primary
//   primary := atom | 'nil-ext-of' '(' expr ')' | 'csl-of' '(' expr ')'
//            | '(' expr ')'
//
// '&&' and '||' are accepted as spellings of '&' and '|'.  The argument of
// nil-ext-of is evaluated on the kernel, and that of csl-of on each class of
// a complete semilattice congruence, as ordered semigroups in their own
// right.

#ifndef OSEG_PROPERTY_HPP_
#define OSEG_PROPERTY_HPP_

#include <cstddef>      // for size_t
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "core.hpp"           // for OrderedSemigroup
#include "decomposition.hpp"  // for TypePredicate
#include "exception.hpp"      // for Error
#include "regularity.hpp"     // for RvReading

namespace oseg {

  struct PropertyExpr {
    enum class Kind { atom, nil_ext_of, csl_of, negation, conjunction, disjunction };

    Kind                      kind;
    std::string               atom;  // atom only
    std::vector<PropertyExpr> args;  // 1 for nil_ext_of, csl_of, negation; 2
                                     // for the connectives

    static PropertyExpr make_atom(std::string name);
    static PropertyExpr nil_ext_of(PropertyExpr arg);
    static PropertyExpr csl_of(PropertyExpr arg);
    static PropertyExpr negation(PropertyExpr arg);
    static PropertyExpr conjunction(PropertyExpr lhs, PropertyExpr rhs);
    static PropertyExpr disjunction(PropertyExpr lhs, PropertyExpr rhs);

    friend bool operator==(PropertyExpr const&, PropertyExpr const&) = default;
  };

  //! position is the 1-based column of the offending character (one past the
  //! end of the text for an unexpected end of input).
  class PropertyParseError : public Error {
   public:
    PropertyParseError(std::size_t position, std::vector<std::string> expected);

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }
    [[nodiscard]] std::vector<std::string> const& expected() const noexcept {
      return _expected;
    }

   private:
    std::size_t              _position;
    std::vector<std::string> _expected;
  };

  class UnknownAtom : public Error {
   public:
    UnknownAtom(std::string name, std::size_t position);

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::string _name;
    std::size_t _position;
  };

  //! Throws PropertyParseError or UnknownAtom.
  [[nodiscard]] PropertyExpr parse_property_expr(std::string_view text);

  //! Minimal parenthesization; parse_property_expr(print(e)) == e.
  [[nodiscard]] std::string print(PropertyExpr const& e);

  struct PropertyAtom {
    std::string_view name;
    bool (*holds)(OrderedSemigroup const&, RvReading);
  };

  //! The closed set of plain atoms, in alphabetical order.
  [[nodiscard]] std::span<PropertyAtom const> property_atoms();

  struct EvaluationOptions {
    RvReading reading = RvReading::nonempty;
  };

  //! Throws OrderTooLarge from csl-of on structures beyond the scan limit.
  [[nodiscard]] bool evaluate(OrderedSemigroup const&  S,
                              PropertyExpr const&      e,
                              EvaluationOptions const& options = {});

  //! The expression as a type predicate, named by print(e).
  [[nodiscard]] TypePredicate to_type_predicate(PropertyExpr const&      e,
                                                EvaluationOptions const& options
                                                = {});

}  // namespace oseg

#endif  // OSEG_PROPERTY_HPP_
