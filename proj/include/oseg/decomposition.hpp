// Nil-extensions and complete semilattice decompositions.
//
// A complete semilattice congruence rho satisfies a rho a^2, ab rho ba, and
// a <= b implies a rho ab.  Its classes S_alpha form a semilattice Y under
// S_alpha S_beta in S_(alpha beta), ordered by alpha <= beta iff
// alpha = alpha beta.

#ifndef OSEG_DECOMPOSITION_HPP_
#define OSEG_DECOMPOSITION_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "core.hpp"  // for OrderedSemigroup, ElementSubset

namespace oseg {

  //! A partition of 0..n-1, stored as class labels numbered in order of first
  //! occurrence (a restricted growth string).
  class Partition {
   public:
    //! Any labelling; equal labels mean the same class.
    explicit Partition(std::vector<std::size_t> const& labels);

    [[nodiscard]] std::size_t order() const noexcept {
      return _labels.size();
    }
    [[nodiscard]] std::size_t class_count() const noexcept {
      return _classes.size();
    }
    [[nodiscard]] std::size_t class_of(std::size_t a) const noexcept {
      return _labels[a];
    }
    [[nodiscard]] ElementSubset const& members(std::size_t c) const noexcept {
      return _classes[c];
    }
    [[nodiscard]] std::vector<ElementSubset> const& classes() const noexcept {
      return _classes;
    }
    [[nodiscard]] std::vector<std::size_t> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] bool related(std::size_t a, std::size_t b) const noexcept {
      return _labels[a] == _labels[b];
    }
    //! Every pair related here is related in other.
    [[nodiscard]] bool refines(Partition const& other) const;

    //! "{{0},{1,2}}"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Partition const& x, Partition const& y) {
      return x._labels == y._labels;
    }

   private:
    std::vector<std::size_t>   _labels;
    std::vector<ElementSubset> _classes;
  };

  //! Every partition of an n-element set, in lexicographic order of the
  //! restricted growth strings.  Throws OrderTooLarge above max_scan_order.
  [[nodiscard]] std::vector<Partition> all_partitions(std::size_t n);

  //! A complete semilattice congruence together with the induced semilattice
  //! of its classes.
  struct CongruencePartition {
    Partition partition;
    // class_product[alpha * k + beta] = alpha beta
    std::vector<std::size_t> class_product;
    // class_order[alpha * k + beta] iff alpha = alpha beta
    std::vector<bool> class_order;
  };

  //! Congruence-style check: congruence, a rho a^2, ab rho ba, and
  //! a <= b implies a rho ab.
  [[nodiscard]] bool is_complete_semilattice_congruence(OrderedSemigroup const& S,
                                                        Partition const& p);

  //! Decomposition-style check: the classes are subsemigroups, the products
  //! S_alpha S_beta each land in one class, the induced operation on classes
  //! is a semilattice, and S_beta meeting (S_alpha] implies beta <= alpha.
  [[nodiscard]] bool
  is_complete_semilattice_decomposition(OrderedSemigroup const& S,
                                        Partition const&        p);

  //! The induced semilattice, if p is a complete semilattice congruence.
  [[nodiscard]] std::optional<CongruencePartition>
  as_complete_semilattice_congruence(OrderedSemigroup const& S,
                                     Partition const&        p);

  //! Union-find closure of the seed pairs (a, a^2), (ab, ba) and (a, ab) for
  //! a <= b under left and right translation.
  [[nodiscard]] CongruencePartition
  least_complete_semilattice_congruence(OrderedSemigroup const& S);

  //! Brute-force partition scan.  Throws OrderTooLarge above max_scan_order.
  [[nodiscard]] std::vector<CongruencePartition>
  all_complete_semilattice_congruences(OrderedSemigroup const& S);

  //! A named decision procedure on ordered semigroups.
  struct TypePredicate {
    std::string                                  name;
    std::function<bool(OrderedSemigroup const&)> holds;

    [[nodiscard]] bool operator()(OrderedSemigroup const& S) const {
      return holds(S);
    }
  };

  //! Conjunction of two predicates, named "x & y".
  [[nodiscard]] TypePredicate operator&&(TypePredicate const& x,
                                         TypePredicate const& y);

  struct NilExtension {
    bool holds = false;
    // least m with a^m in K, per element (absent if there is none)
    std::vector<std::optional<std::size_t>> exponents;
  };

  //! S is a nil-extension of K: K is a two-sided ideal and every element has
  //! a power in K.  An empty K never qualifies.
  [[nodiscard]] NilExtension is_nil_extension(OrderedSemigroup const& S,
                                              ElementSubset const&    K);

  struct NilExtensionOfType {
    enum class Outcome { found, kernel_not_nil, type_fails };
    Outcome       outcome;
    ElementSubset ideal;  // the kernel, whatever the outcome

    [[nodiscard]] bool found() const noexcept {
      return outcome == Outcome::found;
    }
  };

  //! Whether S is a nil-extension of its kernel K and K, as an ordered
  //! semigroup with the inherited order, has type tau.
  [[nodiscard]] NilExtensionOfType
  nil_extension_of_type(OrderedSemigroup const& S, TypePredicate const& tau);

  //! The type "nil-extension of an ordered semigroup of type tau".
  [[nodiscard]] TypePredicate nil_extension_type(TypePredicate const& tau);

  struct SemilatticeOfType {
    bool                               holds = false;
    std::optional<CongruencePartition> witness;
    // false if only the least congruence was consulted
    bool exhaustive = true;
  };

  //! Whether some complete semilattice congruence has every class of type
  //! tau.  The least congruence is tried first.  Above max_scan_order this
  //! throws OrderTooLarge, unless allow_least_only is set, in which case
  //! only the least congruence is consulted and exhaustive is false.
  [[nodiscard]] SemilatticeOfType
  is_complete_semilattice_of(OrderedSemigroup const& S,
                             TypePredicate const&    tau,
                             bool                    allow_least_only = false);

  //! Whether every class of the congruence has type tau.
  [[nodiscard]] bool all_classes_of_type(OrderedSemigroup const&    S,
                                         CongruencePartition const& rho,
                                         TypePredicate const&       tau);

}  // namespace oseg

#endif  // OSEG_DECOMPOSITION_HPP_
