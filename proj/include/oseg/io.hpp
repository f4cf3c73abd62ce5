// Canonical JSON structure format:
//
//   {"order":n,"table":[[row 0],...,[row n-1]],"leq":[[i,j],...]}
//
// table[i][j] is i*j; leq lists every pair i <= j, reflexive pairs
// included.  to_json() writes it without whitespace, with the keys in the
// order above and the leq pairs in lexicographic order, so two structures
// are equal iff their serializations are byte-identical.

#ifndef OSEG_IO_HPP_
#define OSEG_IO_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "core.hpp"  // for OrderedSemigroup, ValidationResult
#include "json.hpp"  // for nlohmann::ordered_json

namespace oseg {

  using json = nlohmann::ordered_json;

  //! The shape-checked contents of a structure file, not yet validated
  //! against the axioms.
  struct StructureData {
    std::size_t              order = 0;
    std::vector<std::size_t> table;  // row-major
    std::vector<bool>        leq;    // row-major
  };

  //! Throws ParseError on malformed JSON, a wrong shape, or any index out of
  //! range.
  [[nodiscard]] StructureData parse_structure(std::string_view text);
  [[nodiscard]] StructureData parse_structure_value(json const& value);

  //! parse_structure followed by validate.
  [[nodiscard]] ValidationResult read_structure(std::string_view text);

  [[nodiscard]] json        to_json_value(OrderedSemigroup const& S);
  [[nodiscard]] std::string to_json(OrderedSemigroup const& S);

}  // namespace oseg

#endif  // OSEG_IO_HPP_
