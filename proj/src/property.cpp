#include "oseg/property.hpp"

#include <array>    // for array
#include <cctype>   // for isalnum, isspace
#include <sstream>  // for ostringstream

#include "oseg/ideals.hpp"     // for is_simple
#include "oseg/relations.hpp"  // for is_archimedean

namespace oseg {

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  PropertyExpr PropertyExpr::make_atom(std::string name) {
    return PropertyExpr{Kind::atom, std::move(name), {}};
  }
  PropertyExpr PropertyExpr::nil_ext_of(PropertyExpr arg) {
    return PropertyExpr{Kind::nil_ext_of, {}, {std::move(arg)}};
  }
  PropertyExpr PropertyExpr::csl_of(PropertyExpr arg) {
    return PropertyExpr{Kind::csl_of, {}, {std::move(arg)}};
  }
  PropertyExpr PropertyExpr::negation(PropertyExpr arg) {
    return PropertyExpr{Kind::negation, {}, {std::move(arg)}};
  }
  PropertyExpr PropertyExpr::conjunction(PropertyExpr lhs, PropertyExpr rhs) {
    return PropertyExpr{Kind::conjunction, {}, {std::move(lhs), std::move(rhs)}};
  }
  PropertyExpr PropertyExpr::disjunction(PropertyExpr lhs, PropertyExpr rhs) {
    return PropertyExpr{Kind::disjunction, {}, {std::move(lhs), std::move(rhs)}};
  }

  namespace {
    std::string join(std::vector<std::string> const& xs) {
      std::string result;
      for (auto const& x : xs) {
        result += (result.empty() ? "" : ", ") + x;
      }
      return result;
    }
  }  // namespace

  PropertyParseError::PropertyParseError(std::size_t              position,
                                         std::vector<std::string> expected)
      : Error("parse error at position " + std::to_string(position)
              + ": expected " + join(expected)),
        _position(position),
        _expected(std::move(expected)) {}

  UnknownAtom::UnknownAtom(std::string name, std::size_t position)
      : Error("unknown atom \"" + name + "\" at position "
              + std::to_string(position)),
        _name(std::move(name)),
        _position(position) {}

  ////////////////////////////////////////////////////////////////////////
  // Atoms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::array<PropertyAtom, 15> the_atoms{{
        {"archimedean",
         [](OrderedSemigroup const& S, RvReading) {
           return is_archimedean(S, ArchimedeanKind::two_sided);
         }},
        {"intra-pi-regular",
         [](OrderedSemigroup const& S, RvReading) {
           return is_intra_pi_regular(S);
         }},
        {"l-archimedean",
         [](OrderedSemigroup const& S, RvReading) {
           return is_archimedean(S, ArchimedeanKind::l);
         }},
        {"left-pi-inverse",
         [](OrderedSemigroup const& S, RvReading rd) {
           return is_left_pi_inverse(S, rd);
         }},
        {"left-simple",
         [](OrderedSemigroup const& S, RvReading) {
           return is_simple(S, SimplicityKind::left);
         }},
        {"pi-inverse",
         [](OrderedSemigroup const& S, RvReading rd) {
           return is_pi_inverse(S, rd);
         }},
        {"pi-regular",
         [](OrderedSemigroup const& S, RvReading) { return is_pi_regular(S); }},
        {"r-archimedean",
         [](OrderedSemigroup const& S, RvReading) {
           return is_archimedean(S, ArchimedeanKind::r);
         }},
        {"regular",
         [](OrderedSemigroup const& S, RvReading) {
           return is_regular_semigroup(S);
         }},
        {"right-inverse",
         [](OrderedSemigroup const& S, RvReading rd) {
           return is_right_inverse(S, rd);
         }},
        {"right-pi-inverse",
         [](OrderedSemigroup const& S, RvReading rd) {
           return is_right_pi_inverse(S, rd);
         }},
        {"right-simple",
         [](OrderedSemigroup const& S, RvReading) {
           return is_simple(S, SimplicityKind::right);
         }},
        {"simple",
         [](OrderedSemigroup const& S, RvReading) {
           return is_simple(S, SimplicityKind::two_sided);
         }},
        {"t-archimedean",
         [](OrderedSemigroup const& S, RvReading) {
           return is_archimedean(S, ArchimedeanKind::t);
         }},
        {"t-simple",
         [](OrderedSemigroup const& S, RvReading) {
           return is_simple(S, SimplicityKind::t);
         }},
    }};

    PropertyAtom const* find_atom(std::string_view name) {
      for (auto const& atom : the_atoms) {
        if (atom.name == name) {
          return &atom;
        }
      }
      return nullptr;
    }
  }  // namespace

  std::span<PropertyAtom const> property_atoms() {
    return the_atoms;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parser
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      PropertyExpr parse() {
        auto result = expr();
        skip_space();
        if (_pos != _text.size()) {
          fail({"'&'", "'|'", "end of input"});
        }
        return result;
      }

     private:
      [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw PropertyParseError(_pos + 1, std::move(expected));
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      // Consumes c (or cc) if it is next.
      bool accept_operator(char c) {
        skip_space();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          if (_pos < _text.size() && _text[_pos] == c) {
            ++_pos;
          }
          return true;
        }
        return false;
      }

      bool accept(char c) {
        skip_space();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      static bool is_word_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '-'
               || c == '_';
      }

      PropertyExpr expr() {
        auto lhs = conj();
        while (accept_operator('|')) {
          lhs = PropertyExpr::disjunction(std::move(lhs), conj());
        }
        return lhs;
      }

      PropertyExpr conj() {
        auto lhs = unary();
        while (accept_operator('&')) {
          lhs = PropertyExpr::conjunction(std::move(lhs), unary());
        }
        return lhs;
      }

      PropertyExpr unary() {
        if (accept('!')) {
          return PropertyExpr::negation(unary());
        }
        return primary();
      }

      PropertyExpr parenthesized() {
        if (!accept('(')) {
          fail({"'('"});
        }
        auto inner = expr();
        if (!accept(')')) {
          fail({"')'", "'&'", "'|'"});
        }
        return inner;
      }

      PropertyExpr primary() {
        skip_space();
        if (_pos < _text.size() && _text[_pos] == '(') {
          return parenthesized();
        }
        auto const start = _pos;
        while (_pos < _text.size() && is_word_char(_text[_pos])) {
          ++_pos;
        }
        if (start == _pos) {
          fail({"atom", "'('", "'!'"});
        }
        std::string word(_text.substr(start, _pos - start));
        if (word == "nil-ext-of") {
          return PropertyExpr::nil_ext_of(parenthesized());
        }
        if (word == "csl-of") {
          return PropertyExpr::csl_of(parenthesized());
        }
        if (find_atom(word) == nullptr) {
          throw UnknownAtom(std::move(word), start + 1);
        }
        return PropertyExpr::make_atom(std::move(word));
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    // 0 = disjunction, 1 = conjunction, 2 = everything else
    int precedence(PropertyExpr const& e) {
      switch (e.kind) {
        case PropertyExpr::Kind::disjunction:
          return 0;
        case PropertyExpr::Kind::conjunction:
          return 1;
        default:
          return 2;
      }
    }

    void print_to(std::ostringstream& out, PropertyExpr const& e) {
      auto wrapped = [&out](PropertyExpr const& sub, bool parens) {
        if (parens) {
          out << '(';
        }
        print_to(out, sub);
        if (parens) {
          out << ')';
        }
      };
      switch (e.kind) {
        case PropertyExpr::Kind::atom:
          out << e.atom;
          break;
        case PropertyExpr::Kind::nil_ext_of:
          out << "nil-ext-of(";
          print_to(out, e.args[0]);
          out << ')';
          break;
        case PropertyExpr::Kind::csl_of:
          out << "csl-of(";
          print_to(out, e.args[0]);
          out << ')';
          break;
        case PropertyExpr::Kind::negation:
          out << '!';
          wrapped(e.args[0], precedence(e.args[0]) < 2);
          break;
        case PropertyExpr::Kind::conjunction:
        case PropertyExpr::Kind::disjunction: {
          int const p = precedence(e);
          // left associative: a right operand of equal precedence needs
          // parentheses
          wrapped(e.args[0], precedence(e.args[0]) < p);
          out << (p == 1 ? " & " : " | ");
          wrapped(e.args[1], precedence(e.args[1]) <= p);
          break;
        }
      }
    }
  }  // namespace

  PropertyExpr parse_property_expr(std::string_view text) {
    return Parser(text).parse();
  }

  std::string print(PropertyExpr const& e) {
    std::ostringstream out;
    print_to(out, e);
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  bool evaluate(OrderedSemigroup const&  S,
                PropertyExpr const&      e,
                EvaluationOptions const& options) {
    switch (e.kind) {
      case PropertyExpr::Kind::atom: {
        auto const* atom = find_atom(e.atom);
        if (atom == nullptr) {
          throw UnknownAtom(e.atom, 0);
        }
        return atom->holds(S, options.reading);
      }
      case PropertyExpr::Kind::nil_ext_of:
        return nil_extension_of_type(S, to_type_predicate(e.args[0], options))
            .found();
      case PropertyExpr::Kind::csl_of:
        return is_complete_semilattice_of(
                   S, to_type_predicate(e.args[0], options))
            .holds;
      case PropertyExpr::Kind::negation:
        return !evaluate(S, e.args[0], options);
      case PropertyExpr::Kind::conjunction:
        return evaluate(S, e.args[0], options)
               && evaluate(S, e.args[1], options);
      case PropertyExpr::Kind::disjunction:
        return evaluate(S, e.args[0], options)
               || evaluate(S, e.args[1], options);
    }
    return false;
  }

  TypePredicate to_type_predicate(PropertyExpr const&      e,
                                  EvaluationOptions const& options) {
    return TypePredicate{print(e), [e, options](OrderedSemigroup const& T) {
                           return evaluate(T, e, options);
                         }};
  }

}  // namespace oseg
