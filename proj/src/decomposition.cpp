#include "oseg/decomposition.hpp"

#include <numeric>  // for iota
#include <sstream>  // for ostringstream
#include <utility>  // for pair

#include "oseg/exception.hpp"  // for OrderTooLarge
#include "oseg/ideals.hpp"     // for kernel, restrict, is_ideal

namespace oseg {

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<std::size_t> const& labels)
      : _labels(labels.size()) {
    std::vector<std::pair<std::size_t, std::size_t>> seen;  // label -> class
    for (std::size_t a = 0; a < labels.size(); ++a) {
      std::size_t c = seen.size();
      for (auto const& [label, cls] : seen) {
        if (label == labels[a]) {
          c = cls;
          break;
        }
      }
      if (c == seen.size()) {
        seen.emplace_back(labels[a], c);
        _classes.emplace_back(labels.size());
      }
      _labels[a] = c;
      _classes[c].insert(a);
    }
  }

  bool Partition::refines(Partition const& other) const {
    for (auto const& c : _classes) {
      if (!c.subset_of(other.members(other.class_of(c.first())))) {
        return false;
      }
    }
    return true;
  }

  std::string Partition::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t c = 0; c < _classes.size(); ++c) {
      out << (c == 0 ? "" : ",") << _classes[c].to_string();
    }
    out << '}';
    return out.str();
  }

  std::vector<Partition> all_partitions(std::size_t n) {
    if (n > max_scan_order) {
      throw OrderTooLarge(n, max_scan_order);
    }
    std::vector<Partition> result;
    if (n == 0) {
      return result;
    }
    // restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i))
    std::vector<std::size_t> rgs(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    while (true) {
      result.emplace_back(rgs);
      std::size_t i = n - 1;
      while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++rgs[i];
      prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs[j]        = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Checkers
  ////////////////////////////////////////////////////////////////////////

  bool is_complete_semilattice_congruence(OrderedSemigroup const& S,
                                          Partition const&        p) {
    std::size_t const n = S.order();
    for (std::size_t a = 0; a < n; ++a) {
      if (!p.related(a, S.product(a, a))) {
        return false;
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (!p.related(S.product(a, b), S.product(b, a))) {
          return false;
        }
        if (S.leq(a, b) && !p.related(a, S.product(a, b))) {
          return false;
        }
        if (!p.related(a, b)) {
          continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (!p.related(S.product(c, a), S.product(c, b))
              || !p.related(S.product(a, c), S.product(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    // alpha beta for the classes of p, if every S_alpha S_beta lies in a
    // single class
    std::optional<std::vector<std::size_t>>
    class_products(OrderedSemigroup const& S, Partition const& p) {
      std::size_t const        k = p.class_count();
      std::vector<std::size_t> prod(k * k);
      for (std::size_t alpha = 0; alpha < k; ++alpha) {
        for (std::size_t beta = 0; beta < k; ++beta) {
          auto const block
              = subset_product(S, p.members(alpha), p.members(beta));
          auto const gamma = p.class_of(block.first());
          if (!block.subset_of(p.members(gamma))) {
            return std::nullopt;
          }
          prod[alpha * k + beta] = gamma;
        }
      }
      return prod;
    }

    std::vector<bool> semilattice_order(std::vector<std::size_t> const& prod,
                                        std::size_t                     k) {
      std::vector<bool> result(k * k);
      for (std::size_t alpha = 0; alpha < k; ++alpha) {
        for (std::size_t beta = 0; beta < k; ++beta) {
          result[alpha * k + beta] = prod[alpha * k + beta] == alpha;
        }
      }
      return result;
    }
  }  // namespace

  bool is_complete_semilattice_decomposition(OrderedSemigroup const& S,
                                             Partition const&        p) {
    std::size_t const k = p.class_count();
    for (auto const& c : p.classes()) {
      if (!subset_product(S, c, c).subset_of(c)) {
        return false;
      }
    }
    auto const prod = class_products(S, p);
    if (!prod) {
      return false;
    }
    auto const& Y = *prod;
    for (std::size_t x = 0; x < k; ++x) {
      if (Y[x * k + x] != x) {
        return false;
      }
      for (std::size_t y = 0; y < k; ++y) {
        if (Y[x * k + y] != Y[y * k + x]) {
          return false;
        }
        for (std::size_t z = 0; z < k; ++z) {
          if (Y[Y[x * k + y] * k + z] != Y[x * k + Y[y * k + z]]) {
            return false;
          }
        }
      }
    }
    auto const below = semilattice_order(Y, k);
    for (std::size_t alpha = 0; alpha < k; ++alpha) {
      auto const down = downset(S, p.members(alpha));
      for (std::size_t beta = 0; beta < k; ++beta) {
        if (!(p.members(beta) & down).empty() && !below[beta * k + alpha]) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<CongruencePartition>
  as_complete_semilattice_congruence(OrderedSemigroup const& S,
                                     Partition const&        p) {
    if (!is_complete_semilattice_congruence(S, p)) {
      return std::nullopt;
    }
    // a congruence always induces a well defined product on classes
    auto prod  = *class_products(S, p);
    auto order = semilattice_order(prod, p.class_count());
    return CongruencePartition{p, std::move(prod), std::move(order)};
  }

  CongruencePartition
  least_complete_semilattice_congruence(OrderedSemigroup const& S) {
    std::size_t const        n = S.order();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };

    std::vector<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t a = 0; a < n; ++a) {
      queue.emplace_back(a, S.product(a, a));
      for (std::size_t b = 0; b < n; ++b) {
        queue.emplace_back(S.product(a, b), S.product(b, a));
        if (S.leq(a, b)) {
          queue.emplace_back(a, S.product(a, b));
        }
      }
    }
    // Each pair that joins two classes has its translates queued, so at the
    // fixpoint the relation is the equivalence generated by a
    // translation-closed set of pairs, hence a congruence.
    while (!queue.empty()) {
      auto const [a, b] = queue.back();
      queue.pop_back();
      auto const ra = find(a);
      auto const rb = find(b);
      if (ra == rb) {
        continue;
      }
      parent[std::max(ra, rb)] = std::min(ra, rb);
      for (std::size_t c = 0; c < n; ++c) {
        queue.emplace_back(S.product(c, a), S.product(c, b));
        queue.emplace_back(S.product(a, c), S.product(b, c));
      }
    }

    std::vector<std::size_t> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels[a] = find(a);
    }
    Partition p(labels);
    auto      prod  = *class_products(S, p);
    auto      order = semilattice_order(prod, p.class_count());
    return CongruencePartition{std::move(p), std::move(prod), std::move(order)};
  }

  std::vector<CongruencePartition>
  all_complete_semilattice_congruences(OrderedSemigroup const& S) {
    std::vector<CongruencePartition> result;
    for (auto const& p : all_partitions(S.order())) {
      if (auto rho = as_complete_semilattice_congruence(S, p)) {
        result.push_back(std::move(*rho));
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Types, nil-extensions
  ////////////////////////////////////////////////////////////////////////

  TypePredicate operator&&(TypePredicate const& x, TypePredicate const& y) {
    return TypePredicate{x.name + " & " + y.name,
                         [x, y](OrderedSemigroup const& S) {
                           return x(S) && y(S);
                         }};
  }

  NilExtension is_nil_extension(OrderedSemigroup const& S,
                                ElementSubset const&    K) {
    std::size_t const n = S.order();
    NilExtension      result;
    result.exponents.assign(n, std::nullopt);
    bool every_power = true;
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t x = a;
      for (std::size_t m = 1; m <= n; ++m) {
        if (K.contains(x)) {
          result.exponents[a] = m;
          break;
        }
        x = S.product(x, a);
      }
      every_power = every_power && result.exponents[a].has_value();
    }
    result.holds
        = every_power && !K.empty() && is_ideal(S, K, IdealKind::two_sided);
    return result;
  }

  NilExtensionOfType nil_extension_of_type(OrderedSemigroup const& S,
                                           TypePredicate const&    tau) {
    using Outcome = NilExtensionOfType::Outcome;
    auto const K  = kernel(S);
    if (!is_nil_extension(S, K).holds) {
      return {Outcome::kernel_not_nil, K};
    }
    if (!tau(restrict(S, K).structure)) {
      return {Outcome::type_fails, K};
    }
    return {Outcome::found, K};
  }

  TypePredicate nil_extension_type(TypePredicate const& tau) {
    return TypePredicate{"nil-ext-of(" + tau.name + ")",
                         [tau](OrderedSemigroup const& S) {
                           return nil_extension_of_type(S, tau).found();
                         }};
  }

  bool all_classes_of_type(OrderedSemigroup const&    S,
                           CongruencePartition const& rho,
                           TypePredicate const&       tau) {
    for (auto const& c : rho.partition.classes()) {
      if (!tau(restrict(S, c).structure)) {
        return false;
      }
    }
    return true;
  }

  SemilatticeOfType is_complete_semilattice_of(OrderedSemigroup const& S,
                                               TypePredicate const&    tau,
                                               bool allow_least_only) {
    SemilatticeOfType result;
    auto              least = least_complete_semilattice_congruence(S);
    if (all_classes_of_type(S, least, tau)) {
      result.holds   = true;
      result.witness = std::move(least);
      return result;
    }
    if (S.order() > max_scan_order) {
      if (!allow_least_only) {
        throw OrderTooLarge(S.order(), max_scan_order);
      }
      result.exhaustive = false;
      return result;
    }
    for (auto& rho : all_complete_semilattice_congruences(S)) {
      if (all_classes_of_type(S, rho, tau)) {
        result.holds   = true;
        result.witness = std::move(rho);
        return result;
      }
    }
    return result;
  }

}  // namespace oseg
