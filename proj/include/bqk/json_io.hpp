#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "groups.hpp"
#include "structures.hpp"

namespace bqk {

using nlohmann::json;

inline json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return rows;
}

namespace detail {

inline std::vector<std::vector<long long>> read_rows(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw MalformedInput(std::string("missing array '") + key + "'");
  std::vector<std::vector<long long>> rows;
  for (const auto& r : j[key]) {
    if (!r.is_array()) throw MalformedInput(std::string("'") + key + "' rows must be arrays");
    std::vector<long long> row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw MalformedInput(std::string("'") + key + "' entries must be integers");
      row.push_back(v.get<long long>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Table read_table(const json& j, const char* key) {
  auto rows = read_rows(j, key);
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<long long>() != static_cast<long long>(rows.size())))
    throw MalformedInput(std::string("'n' does not match the size of '") + key + "'");
  return Table::from_rows(rows);
}

}  // namespace detail

inline json to_json(const FiniteQuandle& q) { return {{"n", q.size()}, {"table", table_json(q.table())}}; }

inline json to_json(const FiniteBiquandle& b) {
  return {{"n", b.size()}, {"under", table_json(b.under_table())}, {"over", table_json(b.over_table())}};
}

inline json to_json(const FiniteGroup& g) { return {{"n", g.order()}, {"mul", table_json(g.table())}}; }

inline json to_json(const BiquandleStructure& s) {
  json betas = json::array();
  for (const auto& b : s.betas) betas.push_back(b.images());
  return {{"base", to_json(s.base)}, {"betas", betas}};
}

inline FiniteQuandle quandle_from_json(const json& j) { return FiniteQuandle(detail::read_table(j, "table")); }

inline FiniteBiquandle biquandle_from_json(const json& j) {
  return FiniteBiquandle(detail::read_table(j, "under"), detail::read_table(j, "over"));
}

inline FiniteGroup group_from_json(const json& j) { return FiniteGroup(detail::read_table(j, "mul")); }

inline Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw MalformedInput("permutation must be an array");
  std::vector<Elem> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw MalformedInput("permutation entries must be integers");
    v.push_back(x.get<Elem>());
  }
  try {
    return Permutation(std::move(v));
  } catch (const DomainError& e) {
    throw MalformedInput(e.what());
  }
}

inline BiquandleStructure structure_from_json(const json& j) {
  if (!j.contains("base") || !j.contains("betas") || !j["betas"].is_array())
    throw MalformedInput("structure needs 'base' and 'betas'");
  FiniteQuandle base = quandle_from_json(j["base"]);
  std::vector<Permutation> betas;
  for (const auto& b : j["betas"]) betas.push_back(permutation_from_json(b));
  return BiquandleStructure(std::move(base), std::move(betas));
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("bad JSON: ") + e.what());
  }
}

}  // namespace bqk
