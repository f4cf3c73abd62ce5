#ifndef OSEG_EXCEPTION_HPP_
#define OSEG_EXCEPTION_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for pair

namespace oseg {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A subset argument was empty where a nonempty one is required.
  class EmptySubset : public Error {
   public:
    EmptySubset() : Error("the subset must be nonempty") {}
  };

  //! An exhaustive scan was requested on a structure that is too large.
  class OrderTooLarge : public Error {
   public:
    OrderTooLarge(std::size_t order, std::size_t limit)
        : Error("order " + std::to_string(order) + " exceeds the limit "
                + std::to_string(limit)),
          _order(order),
          _limit(limit) {}

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }
    [[nodiscard]] std::size_t limit() const noexcept {
      return _limit;
    }

   private:
    std::size_t _order;
    std::size_t _limit;
  };

  //! restrict() was given a subset that is not multiplicatively closed.
  class NotClosed : public Error {
   public:
    NotClosed(std::size_t a, std::size_t b)
        : Error("subset is not closed: " + std::to_string(a) + " * "
                + std::to_string(b) + " leaves it"),
          _a(a),
          _b(b) {}

    [[nodiscard]] std::pair<std::size_t, std::size_t> witness() const {
      return {_a, _b};
    }

   private:
    std::size_t _a;
    std::size_t _b;
  };

  //! A starred relation was requested on a structure that is not
  //! pi-regular; element() has no regular power.
  class NotPiRegular : public Error {
   public:
    explicit NotPiRegular(std::size_t a)
        : Error("element " + std::to_string(a) + " has no regular power"),
          _a(a) {}

    [[nodiscard]] std::size_t element() const noexcept {
      return _a;
    }

   private:
    std::size_t _a;
  };

  //! check() was given an id that is not in the theorem catalog.
  class UnknownTheorem : public Error {
   public:
    explicit UnknownTheorem(std::string const& id)
        : Error("unknown theorem \"" + id + "\"") {}
  };

  //! The structure does not meet a theorem's stated hypothesis.
  class PreconditionUnmet : public Error {
   public:
    PreconditionUnmet(std::string const& id, std::string const& detail)
        : Error(id + ": precondition unmet: " + detail), _id(id) {}

    [[nodiscard]] std::string const& theorem_id() const noexcept {
      return _id;
    }

   private:
    std::string _id;
  };

  //! Malformed input text (structure JSON, checkpoint JSON).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace oseg

#endif  // OSEG_EXCEPTION_HPP_
