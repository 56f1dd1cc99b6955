#include "semitree/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace semitree {

namespace {

using nlohmann::ordered_json;

int require_int(const ordered_json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError("missing or non-integer field '" + key + "'");
  }
  return j[key].get<int>();
}

std::optional<std::pair<int, int>> read_burnside(const ordered_json& j) {
  bool has_p = j.contains("p"), has_q = j.contains("q");
  if (!has_p && !has_q) return std::nullopt;
  if (!has_p || !has_q) {
    throw ParseError("p and q must be declared together");
  }
  int p = require_int(j, "p"), q = require_int(j, "q");
  if (p < 1 || q < 1) throw ParseError("p and q must be at least 1");
  return std::make_pair(p, q);
}

}  // namespace

MonoidFile parse_monoid_text(const std::string& text, const std::string& source) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError(source + ": expected an object with a string 'kind'");
  }
  std::string kind = j["kind"].get<std::string>();
  MonoidFile out;
  try {
    if (kind == "transformations") {
      int domain = require_int(j, "domain_size");
      if (!j.contains("generators") || !j["generators"].is_array()) {
        throw ParseError("missing 'generators' array");
      }
      std::vector<std::pair<std::string, std::vector<int>>> gens;
      for (const auto& g : j["generators"]) {
        if (!g.contains("label") || !g["label"].is_string()) {
          throw ParseError("generator without a label");
        }
        std::string label = g["label"].get<std::string>();
        if (!g.contains("images") || !g["images"].is_array()) {
          throw ParseError("generator '" + label + "': missing images array");
        }
        std::vector<int> images;
        for (const auto& v : g["images"]) {
          if (!v.is_number_integer()) {
            throw ParseError("generator '" + label + "': non-integer image");
          }
          images.push_back(v.get<int>());
        }
        gens.emplace_back(std::move(label), std::move(images));
      }
      out.monoid = from_generators(domain, gens);
      out.burnside = read_burnside(j);
    } else if (kind == "table") {
      if (!j.contains("table") || !j["table"].is_array()) {
        throw ParseError("missing 'table' array");
      }
      std::vector<std::vector<ElementId>> rows;
      for (const auto& row : j["table"]) {
        if (!row.is_array()) throw ParseError("table rows must be arrays");
        rows.push_back(row.get<std::vector<ElementId>>());
      }
      int identity = require_int(j, "identity");
      std::vector<std::pair<std::string, ElementId>> gens;
      if (j.contains("generators")) {
        for (const auto& g : j["generators"]) {
          if (!g.contains("label") || !g["label"].is_string() ||
              !g.contains("element") || !g["element"].is_number_integer()) {
            throw ParseError("table generators need 'label' and 'element'");
          }
          gens.emplace_back(g["label"].get<std::string>(), g["element"].get<int>());
        }
      }
      std::vector<std::string> names;
      if (j.contains("names")) {
        names = j["names"].get<std::vector<std::string>>();
      }
      out.monoid = from_table(std::move(rows), identity, std::move(gens),
                              std::move(names));
      out.burnside = read_burnside(j);
    } else if (kind == "uniform_tree") {
      if (!j.contains("branching") || !j["branching"].is_array()) {
        throw ParseError("missing 'branching' array");
      }
      out.tree_branching = j["branching"].get<std::vector<int>>();
    } else {
      throw ParseError("unknown kind '" + kind + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(source + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what());
  }
  return out;
}

MonoidFile parse_monoid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_monoid_text(ss.str(), path);
}

std::string dump_table_json(const FiniteMonoid& m) {
  ordered_json j;
  j["kind"] = "table";
  ordered_json rows = ordered_json::array();
  for (int a = 0; a < m.n; ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < m.n; ++b) row.push_back(m.mul(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  j["identity"] = m.identity;
  ordered_json gens = ordered_json::array();
  for (auto& [label, e] : m.generators) {
    gens.push_back({{"label", label}, {"element", e}});
  }
  j["generators"] = std::move(gens);
  ordered_json names = ordered_json::array();
  for (int x = 0; x < m.n; ++x) names.push_back(m.name(x));
  j["names"] = std::move(names);
  return j.dump(2) + "\n";
}

}  // namespace semitree
