#include "oseg/enumeration.hpp"

#include <algorithm>  // for next_permutation
#include <numeric>    // for iota
#include <stdexcept>  // for invalid_argument
#include <utility>    // for pair

#include "oseg/exception.hpp"  // for OrderTooLarge, ParseError

namespace oseg {

  std::string to_string(Dedup d) {
    return d == Dedup::raw ? "raw" : "iso";
  }

  Dedup dedup_from_string(std::string const& s) {
    if (s == "raw") {
      return Dedup::raw;
    }
    if (s == "iso") {
      return Dedup::iso;
    }
    throw std::invalid_argument("dedup mode must be \"raw\" or \"iso\", found \""
                                + s + "\"");
  }

  ////////////////////////////////////////////////////////////////////////
  // TableEnumerator
  ////////////////////////////////////////////////////////////////////////

  TableEnumerator::TableEnumerator(std::size_t n) : _n(n), _cells(n * n, -1) {
    if (n == 0) {
      throw std::invalid_argument("order must be at least 1");
    }
    if (n > max_enumeration_order) {
      throw OrderTooLarge(n, max_enumeration_order);
    }
  }

  bool TableEnumerator::consistent(std::size_t c) const {
    std::size_t const n = _n;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t const i1 = x * n + y;
        if (i1 > c) {
          continue;
        }
        auto const xy = static_cast<std::size_t>(_cells[i1]);
        for (std::size_t z = 0; z < n; ++z) {
          std::size_t const i2 = xy * n + z;
          std::size_t const i3 = y * n + z;
          if (i2 > c || i3 > c) {
            continue;
          }
          std::size_t const i4 = x * n + static_cast<std::size_t>(_cells[i3]);
          if (i4 > c) {
            continue;
          }
          // triples not touching cell c were checked earlier
          if (i1 != c && i2 != c && i3 != c && i4 != c) {
            continue;
          }
          if (_cells[i2] != _cells[i4]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool TableEnumerator::next() {
    if (_done) {
      return false;
    }
    std::size_t const last = _n * _n - 1;
    if (!_started) {
      _started = true;
      _pos     = 0;
    } else {
      _pos = last;
    }
    int const n = static_cast<int>(_n);
    while (true) {
      if (++_cells[_pos] == n) {
        _cells[_pos] = -1;
        if (_pos == 0) {
          _done = true;
          return false;
        }
        --_pos;
        continue;
      }
      if (!consistent(_pos)) {
        continue;
      }
      if (_pos == last) {
        return true;
      }
      ++_pos;
    }
  }

  std::vector<element_type> TableEnumerator::table() const {
    return std::vector<element_type>(_cells.begin(), _cells.end());
  }

  void TableEnumerator::seek(std::vector<element_type> const& table) {
    if (table.size() != _n * _n) {
      throw std::invalid_argument("table has the wrong number of cells");
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= _n) {
        throw std::invalid_argument("table entry out of range");
      }
      _cells[i] = table[i];
    }
    _started = true;
    _done    = false;
    _pos     = _n * _n - 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // Compatible orders
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class OrderSearch {
     public:
      OrderSearch(std::size_t n, std::vector<element_type> const& table)
          : _n(n), _table(table), _excluded(n * n, false) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
              _pairs.emplace_back(i, j);
            }
          }
        }
      }

      std::vector<std::vector<bool>> run() {
        std::vector<bool> discrete(_n * _n, false);
        for (std::size_t i = 0; i < _n; ++i) {
          discrete[i * _n + i] = true;
        }
        recurse(0, discrete);
        return std::move(_result);
      }

     private:
      std::size_t mul(std::size_t a, std::size_t b) const {
        return _table[a * _n + b];
      }

      // Closes rel under compatibility and transitivity after adding (i, j);
      // false if this forces an excluded pair or breaks antisymmetry.
      bool close(std::vector<bool>& rel, std::size_t i, std::size_t j) const {
        std::size_t const                                n = _n;
        std::vector<std::pair<std::size_t, std::size_t>> todo{{i, j}};
        while (!todo.empty()) {
          auto const [a, b] = todo.back();
          todo.pop_back();
          if (rel[a * n + b]) {
            continue;
          }
          if (_excluded[a * n + b] || rel[b * n + a]) {
            return false;
          }
          rel[a * n + b] = true;
          for (std::size_t x = 0; x < n; ++x) {
            todo.emplace_back(mul(x, a), mul(x, b));
            todo.emplace_back(mul(a, x), mul(b, x));
            // transitivity through the new pair
            if (rel[x * n + a]) {
              todo.emplace_back(x, b);
            }
            if (rel[b * n + x]) {
              todo.emplace_back(a, x);
            }
          }
        }
        return true;
      }

      void recurse(std::size_t p, std::vector<bool> const& rel) {
        if (p == _pairs.size()) {
          _result.push_back(rel);
          return;
        }
        auto const [i, j] = _pairs[p];
        if (rel[i * _n + j]) {
          recurse(p + 1, rel);
          return;
        }
        _excluded[i * _n + j] = true;
        recurse(p + 1, rel);
        _excluded[i * _n + j] = false;

        auto extended = rel;
        if (close(extended, i, j)) {
          recurse(p + 1, extended);
        }
      }

      std::size_t                                      _n;
      std::vector<element_type> const&                 _table;
      std::vector<bool>                                _excluded;
      std::vector<std::pair<std::size_t, std::size_t>> _pairs;
      std::vector<std::vector<bool>>                   _result;
    };
  }  // namespace

  std::vector<std::vector<bool>>
  enumerate_compatible_orders(std::size_t                      n,
                              std::vector<element_type> const& table) {
    if (table.size() != n * n) {
      throw std::invalid_argument("table has the wrong number of cells");
    }
    return OrderSearch(n, table).run();
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical form
  ////////////////////////////////////////////////////////////////////////

  OrderedSemigroup canonical_form(OrderedSemigroup const& S) {
    std::size_t const         n = S.order();
    std::vector<std::size_t>  perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<element_type> best;
    std::vector<element_type> code(2 * n * n);
    do {
      // relabel a -> perm[a]
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          auto const cell = perm[a] * n + perm[b];
          code[cell] = static_cast<element_type>(perm[S.product(a, b)]);
          code[n * n + cell] = S.leq(a, b) ? 1 : 0;
        }
      }
      if (best.empty() || code < best) {
        best = code;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<element_type> table(best.begin(), best.begin() + n * n);
    std::vector<bool>         leq(best.begin() + n * n, best.end());
    return OrderedSemigroup::from_trusted(n, std::move(table), leq);
  }

  ////////////////////////////////////////////////////////////////////////
  // EnumerationCursor
  ////////////////////////////////////////////////////////////////////////

  json EnumerationCursor::to_json() const {
    json result;
    result["order"] = order;
    result["dedup"] = to_string(dedup);
    json stack      = json::array();
    for (auto x : prefix_stack) {
      stack.push_back(static_cast<std::size_t>(x));
    }
    result["prefix-stack"] = std::move(stack);
    result["order-index"]  = order_index;
    result["emitted"]      = emitted;
    result["finished"]     = finished;
    return result;
  }

  EnumerationCursor EnumerationCursor::from_json(json const& value) {
    EnumerationCursor c;
    try {
      c.order = value.at("order").get<std::size_t>();
      c.dedup = dedup_from_string(value.at("dedup").get<std::string>());
      for (auto const& x : value.at("prefix-stack")) {
        auto const v = x.get<std::size_t>();
        if (v >= c.order) {
          throw ParseError("prefix-stack entry out of range");
        }
        c.prefix_stack.push_back(static_cast<element_type>(v));
      }
      c.order_index = value.at("order-index").get<std::size_t>();
      c.emitted     = value.at("emitted").get<std::uint64_t>();
      c.finished    = value.value("finished", false);
    } catch (json::exception const& e) {
      throw ParseError(std::string("malformed checkpoint: ") + e.what());
    } catch (std::invalid_argument const& e) {
      throw ParseError(std::string("malformed checkpoint: ") + e.what());
    }
    if (c.order == 0 || c.order > max_enumeration_order
        || (!c.prefix_stack.empty()
            && c.prefix_stack.size() != c.order * c.order)) {
      throw ParseError("malformed checkpoint: inconsistent order");
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // StructureEnumerator
  ////////////////////////////////////////////////////////////////////////

  StructureEnumerator::StructureEnumerator(std::size_t n, Dedup dedup)
      : _n(n), _dedup(dedup), _tables(n) {}

  StructureEnumerator::StructureEnumerator(EnumerationCursor const& cursor)
      : _n(cursor.order),
        _dedup(cursor.dedup),
        _tables(cursor.order),
        _emitted(cursor.emitted),
        _done(cursor.finished) {
    if (!_done && !cursor.prefix_stack.empty()) {
      _tables.seek(cursor.prefix_stack);
      _table       = cursor.prefix_stack;
      _orders      = enumerate_compatible_orders(_n, _table);
      _order_index = cursor.order_index;
      _have_table  = true;
    }
  }

  bool StructureEnumerator::advance_table() {
    if (!_tables.next()) {
      _done       = true;
      _have_table = false;
      return false;
    }
    _table       = _tables.table();
    _orders      = enumerate_compatible_orders(_n, _table);
    _order_index = 0;
    _have_table  = true;
    return true;
  }

  std::optional<OrderedSemigroup> StructureEnumerator::next() {
    while (!_done) {
      if (!_have_table || _order_index >= _orders.size()) {
        if (!advance_table()) {
          break;
        }
        continue;
      }
      auto S = OrderedSemigroup::from_trusted(_n, _table, _orders[_order_index]);
      ++_order_index;
      if (_dedup == Dedup::iso && canonical_form(S) != S) {
        continue;
      }
      ++_emitted;
      return S;
    }
    return std::nullopt;
  }

  EnumerationCursor StructureEnumerator::cursor() const {
    EnumerationCursor c;
    c.order   = _n;
    c.dedup   = _dedup;
    c.emitted  = _emitted;
    c.finished = _done;
    if (_have_table) {
      c.prefix_stack = _table;
      c.order_index  = _order_index;
    }
    return c;
  }

  std::vector<OrderedSemigroup> enumerate_ordered_semigroups(std::size_t n,
                                                             Dedup dedup) {
    std::vector<OrderedSemigroup> result;
    StructureEnumerator           e(n, dedup);
    while (auto S = e.next()) {
      result.push_back(std::move(*S));
    }
    return result;
  }

}  // namespace oseg
