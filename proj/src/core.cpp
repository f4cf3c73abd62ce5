#include "oseg/core.hpp"

#include <sstream>    // for ostringstream
#include <stdexcept>  // for invalid_argument

namespace oseg {

  std::vector<std::size_t> ElementSubset::elements() const {
    std::vector<std::size_t> result;
    result.reserve(size());
    for_each([&result](std::size_t a) { result.push_back(a); });
    return result;
  }

  std::string ElementSubset::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for_each([&](std::size_t a) {
      if (!first) {
        out << ',';
      }
      first = false;
      out << a;
    });
    out << '}';
    return out.str();
  }

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;
  }  // namespace

  std::string to_string(AxiomViolation const& v) {
    std::ostringstream out;
    std::visit(overloaded{
                   [&out](NotAssociative const& x) {
                     out << "NotAssociative(" << x.i << ", " << x.j << ", "
                         << x.k << ")";
                   },
                   [&out](NotPartialOrder const& x) {
                     out << "NotPartialOrder(";
                     switch (x.axiom) {
                       case NotPartialOrder::Axiom::reflexivity:
                         out << "reflexivity, " << x.i << ", " << x.j;
                         break;
                       case NotPartialOrder::Axiom::antisymmetry:
                         out << "antisymmetry, " << x.i << ", " << x.j;
                         break;
                       case NotPartialOrder::Axiom::transitivity:
                         out << "transitivity, " << x.i << ", " << x.j << ", "
                             << x.k;
                         break;
                     }
                     out << ")";
                   },
                   [&out](NotCompatible const& x) {
                     out << "NotCompatible(" << x.a << ", " << x.b << ", "
                         << x.x << ", "
                         << (x.side == NotCompatible::Side::left ? "left"
                                                                 : "right")
                         << ")";
                   }},
               v);
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // OrderedSemigroup
  ////////////////////////////////////////////////////////////////////////

  OrderedSemigroup OrderedSemigroup::from_trusted(std::size_t               n,
                                                  std::vector<element_type> t,
                                                  std::vector<bool> const& leq) {
    OrderedSemigroup S;
    S._order = n;
    S._table = std::move(t);
    S._below.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (leq[a * n + b]) {
          S._below[b] |= std::uint64_t(1) << a;
        }
      }
    }
    return S;
  }

  std::vector<bool> OrderedSemigroup::leq_matrix() const {
    std::vector<bool> result(_order * _order, false);
    for (std::size_t a = 0; a < _order; ++a) {
      for (std::size_t b = 0; b < _order; ++b) {
        result[a * _order + b] = leq(a, b);
      }
    }
    return result;
  }

  bool OrderedSemigroup::discrete_order() const noexcept {
    for (std::size_t b = 0; b < _order; ++b) {
      if (_below[b] != (std::uint64_t(1) << b)) {
        return false;
      }
    }
    return true;
  }

  ValidationResult validate(std::size_t                     n,
                            std::vector<std::size_t> const& table,
                            std::vector<bool> const&        leq) {
    if (n == 0 || n > max_order) {
      throw std::invalid_argument("order must be in [1, "
                                  + std::to_string(max_order) + "], found "
                                  + std::to_string(n));
    }
    if (table.size() != n * n || leq.size() != n * n) {
      throw std::invalid_argument("table and leq must both have n * n entries");
    }
    for (auto x : table) {
      if (x >= n) {
        throw std::invalid_argument("table entry " + std::to_string(x)
                                    + " out of range");
      }
    }

    auto mul = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
    auto le  = [&](std::size_t a, std::size_t b) -> bool { return leq[a * n + b]; };

    ValidationResult result;
    auto&            out = result.violations;

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
            out.emplace_back(NotAssociative{i, j, k});
          }
        }
      }
    }

    using Axiom = NotPartialOrder::Axiom;
    for (std::size_t i = 0; i < n; ++i) {
      if (!le(i, i)) {
        out.emplace_back(NotPartialOrder{Axiom::reflexivity, i, i});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (le(i, j) && le(j, i)) {
          out.emplace_back(NotPartialOrder{Axiom::antisymmetry, i, j});
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!le(i, j)) {
          continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (le(j, k) && !le(i, k)) {
            out.emplace_back(NotPartialOrder{Axiom::transitivity, i, j, k});
          }
        }
      }
    }

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || !le(a, b)) {
          continue;
        }
        for (std::size_t x = 0; x < n; ++x) {
          if (!le(mul(x, a), mul(x, b))) {
            out.emplace_back(NotCompatible{a, b, x, NotCompatible::Side::left});
          }
          if (!le(mul(a, x), mul(b, x))) {
            out.emplace_back(
                NotCompatible{a, b, x, NotCompatible::Side::right});
          }
        }
      }
    }

    if (out.empty()) {
      std::vector<element_type> t(table.begin(), table.end());
      result.structure = OrderedSemigroup::from_trusted(n, std::move(t), leq);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Primitives
  ////////////////////////////////////////////////////////////////////////

  ElementSubset downset(OrderedSemigroup const& S, ElementSubset const& A) {
    ElementSubset result(S.order());
    A.for_each([&](std::size_t a) { result |= S.below(a); });
    return result;
  }

  ElementSubset subset_product(OrderedSemigroup const& S,
                               ElementSubset const&    A,
                               ElementSubset const&    B) {
    ElementSubset result(S.order());
    A.for_each([&](std::size_t a) {
      B.for_each([&](std::size_t b) { result.insert(S.product(a, b)); });
    });
    return result;
  }

  std::size_t power(OrderedSemigroup const& S, std::size_t a, std::size_t m) {
    if (m == 0) {
      throw std::invalid_argument("exponent must be at least 1");
    }
    std::size_t result = a;
    for (std::size_t i = 1; i < m; ++i) {
      result = S.product(result, a);
    }
    return result;
  }

  PowerProfile power_profile(OrderedSemigroup const& S, std::size_t a) {
    // first_seen[x] is the exponent at which x first appears as a power
    std::vector<std::size_t> first_seen(S.order(), 0);
    ElementSubset            powers(S.order());
    std::size_t              x = a;
    for (std::size_t m = 1;; ++m) {
      if (first_seen[x] != 0) {
        return PowerProfile{first_seen[x], m - first_seen[x], powers};
      }
      first_seen[x] = m;
      powers.insert(x);
      x = S.product(x, a);
    }
  }

  MonoidExtension adjoin_identity(OrderedSemigroup const& S) {
    std::size_t const         n  = S.order();
    std::size_t const         n1 = n + 1;
    if (n1 > max_order) {
      throw std::invalid_argument("cannot adjoin an identity at order "
                                  + std::to_string(n));
    }
    std::vector<element_type> table(n1 * n1);
    std::vector<bool>         leq(n1 * n1, false);
    for (std::size_t a = 0; a < n1; ++a) {
      for (std::size_t b = 0; b < n1; ++b) {
        std::size_t ab;
        if (a == n) {
          ab = b;
        } else if (b == n) {
          ab = a;
        } else {
          ab = S.product(a, b);
        }
        table[a * n1 + b] = static_cast<element_type>(ab);
        if (a < n && b < n) {
          leq[a * n1 + b] = S.leq(a, b);
        }
      }
    }
    leq[n * n1 + n] = true;
    return MonoidExtension{
        OrderedSemigroup::from_trusted(n1, std::move(table), leq), n};
  }

}  // namespace oseg
