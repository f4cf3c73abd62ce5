#include "oseg/relations.hpp"

#include <stdexcept>  // for invalid_argument

#include "oseg/exception.hpp"   // for NotPiRegular
#include "oseg/ideals.hpp"      // for principal_ideal
#include "oseg/regularity.hpp"  // for is_regular

namespace oseg {

  std::string to_string(GreenKind k) {
    switch (k) {
      case GreenKind::L:
        return "L";
      case GreenKind::R:
        return "R";
      case GreenKind::J:
        return "J";
      case GreenKind::H:
        return "H";
      case GreenKind::L_star:
        return "L*";
      case GreenKind::R_star:
        return "R*";
      case GreenKind::J_star:
        return "J*";
      case GreenKind::H_star:
        return "H*";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // EquivalenceRelation
  ////////////////////////////////////////////////////////////////////////

  EquivalenceRelation::EquivalenceRelation(GreenKind                  which,
                                           std::vector<std::uint64_t> rows)
      : _which(which), _rows(std::move(rows)) {}

  std::vector<ElementSubset> EquivalenceRelation::classes() const {
    std::vector<ElementSubset> result;
    ElementSubset              seen(_rows.size());
    for (std::size_t a = 0; a < _rows.size(); ++a) {
      if (!seen.contains(a)) {
        result.push_back(class_of(a));
        seen |= result.back();
      }
    }
    return result;
  }

  bool EquivalenceRelation::all_related(ElementSubset const& A) const {
    if (A.empty()) {
      return true;
    }
    // equivalence: all related iff A lies in the class of any member
    return A.subset_of(class_of(A.first()));
  }

  bool EquivalenceRelation::is_universal() const {
    return all_related(ElementSubset::all(_rows.size()));
  }

  EquivalenceRelation
  EquivalenceRelation::intersect(EquivalenceRelation const& other,
                                 GreenKind                  which) const {
    auto rows = _rows;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      rows[a] &= other._rows[a];
    }
    return EquivalenceRelation(which, std::move(rows));
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // rows[a] = {b : key[a] == key[b]}
    template <typename Key>
    EquivalenceRelation kernel_of(GreenKind which, std::vector<Key> const& key) {
      std::vector<std::uint64_t> rows(key.size(), 0);
      for (std::size_t a = 0; a < key.size(); ++a) {
        for (std::size_t b = 0; b < key.size(); ++b) {
          if (key[a] == key[b]) {
            rows[a] |= std::uint64_t(1) << b;
          }
        }
      }
      return EquivalenceRelation(which, std::move(rows));
    }

    std::vector<ElementSubset> principal_ideals(OrderedSemigroup const& S,
                                                IdealKind               kind) {
      std::vector<ElementSubset> result;
      result.reserve(S.order());
      for (std::size_t a = 0; a < S.order(); ++a) {
        result.push_back(principal_ideal(S, a, kind));
      }
      return result;
    }

    GreenKind unstarred(GreenKind k) {
      switch (k) {
        case GreenKind::L_star:
          return GreenKind::L;
        case GreenKind::R_star:
          return GreenKind::R;
        case GreenKind::J_star:
          return GreenKind::J;
        case GreenKind::H_star:
          return GreenKind::H;
        default:
          throw std::invalid_argument("expected a starred relation, found "
                                      + to_string(k));
      }
    }
  }  // namespace

  EquivalenceRelation green(OrderedSemigroup const& S, GreenKind which) {
    switch (which) {
      case GreenKind::L:
        return kernel_of(which, principal_ideals(S, IdealKind::left));
      case GreenKind::R:
        return kernel_of(which, principal_ideals(S, IdealKind::right));
      case GreenKind::J:
        return kernel_of(which, principal_ideals(S, IdealKind::two_sided));
      case GreenKind::H:
        return green(S, GreenKind::L).intersect(green(S, GreenKind::R),
                                                GreenKind::H);
      default:
        throw std::invalid_argument("expected an unstarred relation, found "
                                    + to_string(which));
    }
  }

  std::vector<std::size_t> least_regular_exponents(OrderedSemigroup const& S) {
    std::size_t const        n = S.order();
    std::vector<std::size_t> result(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t x = a;
      for (std::size_t m = 1; m <= n; ++m) {
        if (is_regular(S, x)) {
          result[a] = m;
          break;
        }
        x = S.product(x, a);
      }
      if (result[a] == 0) {
        throw NotPiRegular(a);
      }
    }
    return result;
  }

  EquivalenceRelation green_star(OrderedSemigroup const& S, GreenKind which) {
    auto const base = unstarred(which);
    if (base == GreenKind::H) {
      return green_star(S, GreenKind::L_star)
          .intersect(green_star(S, GreenKind::R_star), GreenKind::H_star);
    }
    auto const exps = least_regular_exponents(S);
    auto const rel  = green(S, base);
    std::size_t const          n = S.order();
    std::vector<std::size_t>   reg_power(n);
    for (std::size_t a = 0; a < n; ++a) {
      reg_power[a] = power(S, a, exps[a]);
    }
    std::vector<std::uint64_t> rows(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (rel.related(reg_power[a], reg_power[b])) {
          rows[a] |= std::uint64_t(1) << b;
        }
      }
    }
    return EquivalenceRelation(which, std::move(rows));
  }

  bool divides(OrderedSemigroup const& S, std::size_t a, std::size_t b) {
    auto const        ext = adjoin_identity(S);
    auto const&       M   = ext.monoid;
    std::size_t const m   = M.order();
    for (std::size_t x = 0; x < m; ++x) {
      auto const xa = M.product(x, a);
      for (std::size_t y = 0; y < m; ++y) {
        if (M.leq(b, M.product(xa, y))) {
          return true;
        }
      }
    }
    return false;
  }

  bool is_archimedean(OrderedSemigroup const& S, ArchimedeanKind kind) {
    std::size_t const n   = S.order();
    auto const        all = S.all();
    for (std::size_t a = 0; a < n; ++a) {
      auto const as = ElementSubset::singleton(n, a);
      ElementSubset target(n);
      switch (kind) {
        case ArchimedeanKind::two_sided:
          target = subset_product(S, subset_product(S, all, as), all);
          break;
        case ArchimedeanKind::l:
          target = subset_product(S, all, as);
          break;
        case ArchimedeanKind::r:
          target = subset_product(S, as, all);
          break;
        case ArchimedeanKind::t:
          target = subset_product(S, subset_product(S, as, all), as);
          break;
      }
      target = downset(S, target);
      for (std::size_t b = 0; b < n; ++b) {
        if ((power_profile(S, b).powers & target).empty()) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace oseg
