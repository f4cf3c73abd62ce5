// Exhaustive generation of finite ordered semigroups.
//
// Tables are produced by cell-by-cell backtracking in row-major order with
// associativity checked on every triple as soon as its four cells are
// known; tables therefore come out in lexicographic order.  For each table
// the compatible partial orders are generated by extending the discrete
// order one pair at a time, closing under transitivity and compatibility
// after every addition.

#ifndef OSEG_ENUMERATION_HPP_
#define OSEG_ENUMERATION_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "core.hpp"  // for OrderedSemigroup
#include "io.hpp"    // for json

namespace oseg {

  //! Largest order the enumerators accept.
  constexpr std::size_t max_enumeration_order = 5;

  enum class Dedup { raw, iso };

  [[nodiscard]] std::string to_string(Dedup d);
  //! Throws std::invalid_argument unless s is "raw" or "iso".
  [[nodiscard]] Dedup dedup_from_string(std::string const& s);

  //! Pull-based stream of every associative n x n table.
  class TableEnumerator {
   public:
    //! Throws OrderTooLarge if n > max_enumeration_order, and
    //! std::invalid_argument if n == 0.
    explicit TableEnumerator(std::size_t n);

    //! Advances to the next table; false once the stream is exhausted.
    bool next();

    //! The current table; only meaningful after next() returned true.
    [[nodiscard]] std::vector<element_type> table() const;

    //! Positions the stream at the given associative table, so that the
    //! following next() yields its successor.
    void seek(std::vector<element_type> const& table);

   private:
    [[nodiscard]] bool consistent(std::size_t cell) const;

    std::size_t      _n;
    std::vector<int> _cells;  // -1 = unassigned
    std::size_t      _pos     = 0;
    bool             _started = false;
    bool             _done    = false;
  };

  //! Every partial order compatible with the table, each exactly once, the
  //! discrete order first.  Matrices are row-major.
  [[nodiscard]] std::vector<std::vector<bool>>
  enumerate_compatible_orders(std::size_t                      n,
                              std::vector<element_type> const& table);

  //! The lexicographically least (table, leq) encoding over all relabelings.
  [[nodiscard]] OrderedSemigroup canonical_form(OrderedSemigroup const& S);

  //! Serializable position of a StructureEnumerator.
  struct EnumerationCursor {
    std::size_t               order = 0;
    Dedup                     dedup = Dedup::raw;
    std::vector<element_type> prefix_stack;  // current table; empty if fresh
    std::size_t               order_index = 0;  // orders of it consumed
    std::uint64_t             emitted     = 0;
    bool                      finished    = false;

    [[nodiscard]] json to_json() const;
    //! Throws ParseError.
    static EnumerationCursor from_json(json const& value);

    friend bool operator==(EnumerationCursor const&, EnumerationCursor const&)
        = default;
  };

  //! Stream of every ordered semigroup of order n (tables x compatible
  //! orders).  With Dedup::iso only structures equal to their canonical form
  //! are produced.
  class StructureEnumerator {
   public:
    StructureEnumerator(std::size_t n, Dedup dedup);
    explicit StructureEnumerator(EnumerationCursor const& cursor);

    [[nodiscard]] std::optional<OrderedSemigroup> next();

    [[nodiscard]] EnumerationCursor cursor() const;

   private:
    bool advance_table();

    std::size_t                    _n;
    Dedup                          _dedup;
    TableEnumerator                _tables;
    std::vector<element_type>      _table;
    std::vector<std::vector<bool>> _orders;
    std::size_t                    _order_index = 0;
    std::uint64_t                  _emitted     = 0;
    bool                           _have_table  = false;
    bool                           _done        = false;
  };

  //! Drains a StructureEnumerator.
  [[nodiscard]] std::vector<OrderedSemigroup>
  enumerate_ordered_semigroups(std::size_t n, Dedup dedup);

}  // namespace oseg

#endif  // OSEG_ENUMERATION_HPP_
