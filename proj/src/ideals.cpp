#include "oseg/ideals.hpp"

#include "oseg/exception.hpp"  // for EmptySubset, NotClosed, OrderTooLarge

namespace oseg {

  ElementSubset principal_ideal(OrderedSemigroup const& S,
                                std::size_t             a,
                                IdealKind               kind) {
    auto const all = S.all();
    auto const as  = ElementSubset::singleton(S.order(), a);
    auto       gen = as;
    switch (kind) {
      case IdealKind::left:
        gen |= subset_product(S, all, as);
        break;
      case IdealKind::right:
        gen |= subset_product(S, as, all);
        break;
      case IdealKind::two_sided: {
        auto const sa = subset_product(S, all, as);
        gen |= sa;
        gen |= subset_product(S, as, all);
        gen |= subset_product(S, sa, all);
        break;
      }
      case IdealKind::bi:
        gen |= subset_product(S, subset_product(S, as, all), as);
        break;
    }
    return downset(S, gen);
  }

  bool is_ideal(OrderedSemigroup const& S,
                ElementSubset const&    A,
                IdealKind               kind) {
    if (A.empty()) {
      throw EmptySubset();
    }
    if (downset(S, A) != A) {
      return false;
    }
    auto const all = S.all();
    switch (kind) {
      case IdealKind::left:
        return subset_product(S, all, A).subset_of(A);
      case IdealKind::right:
        return subset_product(S, A, all).subset_of(A);
      case IdealKind::two_sided:
        return subset_product(S, all, A).subset_of(A)
               && subset_product(S, A, all).subset_of(A);
      case IdealKind::bi:
        return subset_product(S, subset_product(S, A, all), A).subset_of(A);
    }
    return false;
  }

  bool is_simple(OrderedSemigroup const& S, SimplicityKind kind) {
    auto every_principal_is_everything = [&S](IdealKind k) {
      for (std::size_t a = 0; a < S.order(); ++a) {
        if (!principal_ideal(S, a, k).is_full()) {
          return false;
        }
      }
      return true;
    };
    switch (kind) {
      case SimplicityKind::left:
        return every_principal_is_everything(IdealKind::left);
      case SimplicityKind::right:
        return every_principal_is_everything(IdealKind::right);
      case SimplicityKind::two_sided:
        return every_principal_is_everything(IdealKind::two_sided);
      case SimplicityKind::t:
        return every_principal_is_everything(IdealKind::left)
               && every_principal_is_everything(IdealKind::right);
    }
    return false;
  }

  ElementSubset kernel(OrderedSemigroup const& S) {
    auto result = S.all();
    for (std::size_t a = 0; a < S.order(); ++a) {
      result &= principal_ideal(S, a, IdealKind::two_sided);
    }
    return result;
  }

  std::vector<ElementSubset> all_ideals(OrderedSemigroup const& S) {
    std::size_t const n = S.order();
    if (n > max_scan_order) {
      throw OrderTooLarge(n, max_scan_order);
    }
    std::vector<ElementSubset> result;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
      ElementSubset A(n, m);
      if (is_ideal(S, A, IdealKind::two_sided)) {
        result.push_back(A);
      }
    }
    return result;
  }

  ElementSubset Restriction::lift(ElementSubset const& A) const {
    ElementSubset result(from_parent.size());
    A.for_each([&](std::size_t a) { result.insert(to_parent[a]); });
    return result;
  }

  Restriction restrict(OrderedSemigroup const& S, ElementSubset const& K) {
    if (K.empty()) {
      throw EmptySubset();
    }
    Restriction r{S, K.elements(), std::vector<std::size_t>(S.order(), Restriction::npos)};
    for (std::size_t i = 0; i < r.to_parent.size(); ++i) {
      r.from_parent[r.to_parent[i]] = i;
    }
    std::size_t const         k = r.to_parent.size();
    std::vector<element_type> table(k * k);
    std::vector<bool>         leq(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto const a  = r.to_parent[i];
        auto const b  = r.to_parent[j];
        auto const ab = S.product(a, b);
        if (!K.contains(ab)) {
          throw NotClosed(a, b);
        }
        table[i * k + j] = static_cast<element_type>(r.from_parent[ab]);
        leq[i * k + j]   = S.leq(a, b);
      }
    }
    r.structure = OrderedSemigroup::from_trusted(k, std::move(table), leq);
    return r;
  }

}  // namespace oseg
