// Finite ordered semigroups: the structure itself, axiom validation, and the
// subset primitives (downward closure, products, powers) every analysis
// module is written in terms of.

#ifndef OSEG_CORE_HPP_
#define OSEG_CORE_HPP_

#include <bit>          // for popcount, countr_zero
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t, uint64_t
#include <initializer_list>  // for initializer_list
#include <optional>     // for optional
#include <string>       // for string
#include <variant>      // for variant
#include <vector>       // for vector

namespace oseg {

  //! Elements are dense indices 0..n-1.
  using element_type = std::uint8_t;

  //! Subsets are stored as 64-bit masks, which bounds the order.
  constexpr std::size_t max_order = 64;

  ////////////////////////////////////////////////////////////////////////
  // ElementSubset
  ////////////////////////////////////////////////////////////////////////

  //! A subset of the elements of a structure of a fixed order.
  class ElementSubset {
   public:
    ElementSubset() = default;

    explicit ElementSubset(std::size_t universe, std::uint64_t mask = 0)
        : _mask(mask), _universe(static_cast<std::uint8_t>(universe)) {}

    static ElementSubset all(std::size_t universe) {
      return ElementSubset(universe,
                           universe == 64 ? ~std::uint64_t(0)
                                          : (std::uint64_t(1) << universe) - 1);
    }

    static ElementSubset singleton(std::size_t universe, std::size_t a) {
      return ElementSubset(universe, std::uint64_t(1) << a);
    }

    static ElementSubset of(std::size_t                     universe,
                            std::initializer_list<std::size_t> elts) {
      ElementSubset result(universe);
      for (auto a : elts) {
        result.insert(a);
      }
      return result;
    }

    [[nodiscard]] std::size_t universe() const noexcept {
      return _universe;
    }
    [[nodiscard]] std::uint64_t mask() const noexcept {
      return _mask;
    }
    [[nodiscard]] bool contains(std::size_t a) const noexcept {
      return (_mask >> a) & 1U;
    }
    [[nodiscard]] bool empty() const noexcept {
      return _mask == 0;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_mask));
    }
    [[nodiscard]] bool is_full() const noexcept {
      return *this == all(_universe);
    }
    [[nodiscard]] bool subset_of(ElementSubset const& other) const noexcept {
      return (_mask & ~other._mask) == 0;
    }
    //! Least element, or universe() if empty.
    [[nodiscard]] std::size_t first() const noexcept {
      return _mask == 0 ? _universe
                        : static_cast<std::size_t>(std::countr_zero(_mask));
    }

    void insert(std::size_t a) noexcept {
      _mask |= std::uint64_t(1) << a;
    }
    void erase(std::size_t a) noexcept {
      _mask &= ~(std::uint64_t(1) << a);
    }

    ElementSubset& operator|=(ElementSubset const& other) noexcept {
      _mask |= other._mask;
      return *this;
    }
    ElementSubset& operator&=(ElementSubset const& other) noexcept {
      _mask &= other._mask;
      return *this;
    }
    friend ElementSubset operator|(ElementSubset x, ElementSubset const& y) {
      return x |= y;
    }
    friend ElementSubset operator&(ElementSubset x, ElementSubset const& y) {
      return x &= y;
    }
    friend bool operator==(ElementSubset const&, ElementSubset const&)
        = default;

    //! The members in increasing order.
    [[nodiscard]] std::vector<std::size_t> elements() const;

    //! Calls f(a) for every member a in increasing order.
    template <typename Func>
    void for_each(Func&& f) const {
      for (auto m = _mask; m != 0; m &= m - 1) {
        f(static_cast<std::size_t>(std::countr_zero(m)));
      }
    }

    //! "{0,2,3}"
    [[nodiscard]] std::string to_string() const;

   private:
    std::uint64_t _mask     = 0;
    std::uint8_t  _universe = 0;
  };

  ////////////////////////////////////////////////////////////////////////
  // Validation errors
  ////////////////////////////////////////////////////////////////////////

  struct NotAssociative {
    std::size_t i, j, k;
  };

  struct NotPartialOrder {
    enum class Axiom { reflexivity, antisymmetry, transitivity };
    Axiom       axiom;
    std::size_t i, j;
    // only meaningful for transitivity: i <= j, j <= k, but not i <= k
    std::size_t k = 0;
  };

  struct NotCompatible {
    enum class Side { left, right };
    // a <= b but not x*a <= x*b (left) or not a*x <= b*x (right)
    std::size_t a, b, x;
    Side        side;
  };

  using AxiomViolation
      = std::variant<NotAssociative, NotPartialOrder, NotCompatible>;

  [[nodiscard]] std::string to_string(AxiomViolation const& v);

  ////////////////////////////////////////////////////////////////////////
  // OrderedSemigroup
  ////////////////////////////////////////////////////////////////////////

  //! An immutable finite ordered semigroup.  Instances are obtained from
  //! validate(), or from from_trusted() when the caller already knows the
  //! axioms hold (enumeration, restriction).
  class OrderedSemigroup {
   public:
    //! Builds the structure without checking any axiom.
    static OrderedSemigroup from_trusted(std::size_t               order,
                                         std::vector<element_type> table,
                                         std::vector<bool> const&  leq);

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] std::size_t product(std::size_t a,
                                      std::size_t b) const noexcept {
      return _table[a * _order + b];
    }

    [[nodiscard]] bool leq(std::size_t a, std::size_t b) const noexcept {
      return (_below[b] >> a) & 1U;
    }

    //! {x : x <= b}
    [[nodiscard]] ElementSubset below(std::size_t b) const noexcept {
      return ElementSubset(_order, _below[b]);
    }

    [[nodiscard]] ElementSubset all() const {
      return ElementSubset::all(_order);
    }

    [[nodiscard]] std::vector<element_type> const& table() const noexcept {
      return _table;
    }

    //! Row-major leq matrix.
    [[nodiscard]] std::vector<bool> leq_matrix() const;

    //! True iff the order is equality.
    [[nodiscard]] bool discrete_order() const noexcept;

    friend bool operator==(OrderedSemigroup const&, OrderedSemigroup const&)
        = default;

   private:
    OrderedSemigroup() = default;

    std::size_t                _order = 0;
    std::vector<element_type>  _table;
    std::vector<std::uint64_t> _below;
  };

  struct ValidationResult {
    std::optional<OrderedSemigroup> structure;  // set iff violations is empty
    std::vector<AxiomViolation>     violations;

    [[nodiscard]] bool valid() const noexcept {
      return violations.empty();
    }
  };

  //! Checks associativity, the partial order axioms and compatibility, and
  //! reports every violation found.  table and leq are row-major n x n;
  //! table[i * n + j] is i*j and leq[i * n + j] holds iff i <= j.
  //!
  //! Throws std::invalid_argument when the shapes are wrong, an entry is out
  //! of range, or order is 0 or larger than max_order.
  [[nodiscard]] ValidationResult validate(std::size_t                     order,
                                          std::vector<std::size_t> const& table,
                                          std::vector<bool> const&        leq);

  ////////////////////////////////////////////////////////////////////////
  // Primitives
  ////////////////////////////////////////////////////////////////////////

  //! (A] = {x : x <= a for some a in A}
  [[nodiscard]] ElementSubset downset(OrderedSemigroup const& S,
                                      ElementSubset const&    A);

  //! AB = {ab : a in A, b in B}
  [[nodiscard]] ElementSubset subset_product(OrderedSemigroup const& S,
                                             ElementSubset const&    A,
                                             ElementSubset const&    B);

  //! a^m, m >= 1
  [[nodiscard]] std::size_t power(OrderedSemigroup const& S,
                                  std::size_t             a,
                                  std::size_t             m);

  //! The sequence a, a^2, ... is eventually periodic: a^index is the first
  //! power that recurs, and a^(index + period) = a^index.
  struct PowerProfile {
    std::size_t   index;
    std::size_t   period;
    ElementSubset powers;
  };

  [[nodiscard]] PowerProfile power_profile(OrderedSemigroup const& S,
                                           std::size_t             a);

  //! S^1: S with an identity adjoined as element order(S).  The identity is
  //! comparable only to itself.
  struct MonoidExtension {
    OrderedSemigroup monoid;
    std::size_t      identity;
  };

  [[nodiscard]] MonoidExtension adjoin_identity(OrderedSemigroup const& S);

}  // namespace oseg

#endif  // OSEG_CORE_HPP_
