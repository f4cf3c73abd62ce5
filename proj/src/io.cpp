#include "oseg/io.hpp"

#include "oseg/exception.hpp"  // for ParseError

namespace oseg {

  namespace {
    std::size_t index_in_range(json const& v, std::size_t n, char const* what) {
      if (!v.is_number_integer()) {
        throw ParseError(std::string(what) + " must be an integer");
      }
      auto const x = v.get<long long>();
      if (x < 0 || static_cast<unsigned long long>(x) >= n) {
        throw ParseError(std::string(what) + " " + std::to_string(x)
                         + " out of range [0, " + std::to_string(n) + ")");
      }
      return static_cast<std::size_t>(x);
    }
  }  // namespace

  StructureData parse_structure_value(json const& value) {
    if (!value.is_object()) {
      throw ParseError("structure must be a JSON object");
    }
    for (auto const* key : {"order", "table", "leq"}) {
      if (!value.contains(key)) {
        throw ParseError(std::string("missing key \"") + key + "\"");
      }
    }
    auto const& jorder = value["order"];
    if (!jorder.is_number_integer() || jorder.get<long long>() < 1
        || jorder.get<long long>() > static_cast<long long>(max_order)) {
      throw ParseError("order must be an integer in [1, "
                       + std::to_string(max_order) + "]");
    }
    StructureData data;
    data.order        = jorder.get<std::size_t>();
    std::size_t const n = data.order;

    auto const& jtable = value["table"];
    if (!jtable.is_array() || jtable.size() != n) {
      throw ParseError("table must have " + std::to_string(n) + " rows");
    }
    data.table.reserve(n * n);
    for (auto const& row : jtable) {
      if (!row.is_array() || row.size() != n) {
        throw ParseError("every table row must have " + std::to_string(n)
                         + " entries");
      }
      for (auto const& x : row) {
        data.table.push_back(index_in_range(x, n, "table entry"));
      }
    }

    auto const& jleq = value["leq"];
    if (!jleq.is_array()) {
      throw ParseError("leq must be an array of pairs");
    }
    data.leq.assign(n * n, false);
    for (auto const& pair : jleq) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("leq entries must be pairs [i, j]");
      }
      auto const i = index_in_range(pair[0], n, "leq index");
      auto const j = index_in_range(pair[1], n, "leq index");
      data.leq[i * n + j] = true;
    }
    return data;
  }

  StructureData parse_structure(std::string_view text) {
    json value;
    try {
      value = json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_structure_value(value);
  }

  ValidationResult read_structure(std::string_view text) {
    auto const data = parse_structure(text);
    return validate(data.order, data.table, data.leq);
  }

  json to_json_value(OrderedSemigroup const& S) {
    std::size_t const n = S.order();
    json              table = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) {
        row.push_back(S.product(i, j));
      }
      table.push_back(std::move(row));
    }
    json leq = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (S.leq(i, j)) {
          leq.push_back(json::array({i, j}));
        }
      }
    }
    json result;
    result["order"] = n;
    result["table"] = std::move(table);
    result["leq"]   = std::move(leq);
    return result;
  }

  std::string to_json(OrderedSemigroup const& S) {
    return to_json_value(S).dump();
  }

}  // namespace oseg
