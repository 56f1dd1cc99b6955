#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semitree/monoid.hpp"

// JSON ingestion of monoid description files and the canonical table dump.

namespace semitree {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MonoidFile {
  std::optional<FiniteMonoid> monoid;
  std::optional<std::pair<int, int>> burnside;     // declared x^{p+q} = x^p
  std::optional<std::vector<int>> tree_branching;  // uniform_tree files

  bool is_tree() const { return tree_branching.has_value(); }
};

MonoidFile parse_monoid_text(const std::string& text, const std::string& source);
MonoidFile parse_monoid_file(const std::string& path);

// A "table" document that re-ingests to the identical monoid.
std::string dump_table_json(const FiniteMonoid& m);

}  // namespace semitree
