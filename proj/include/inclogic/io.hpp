#pragma once

// JSON formats for models and teams.
//   model:     {"worlds": [...], "edges": [[u, v], ...], "valuation": {"p": [...]}}
//   team:      {"team": [...]}
//   prop team: {"domain": [...], "assignments": [[1, 0, ...], ...]}

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "inclogic/error.hpp"
#include "inclogic/structures.hpp"

namespace inclogic {

using json = nlohmann::json;

inline KripkeModel model_from_json(const json& j) {
  try {
    auto worlds = j.at("worlds").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw FormatError("model: each edge must be [u, v]");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
    std::map<std::string, std::vector<std::string>> val;
    if (j.contains("valuation"))
      val = j.at("valuation").get<std::map<std::string, std::vector<std::string>>>();
    return KripkeModel::from_names(std::move(worlds), edges, val);
  } catch (const json::exception& e) {
    throw FormatError(std::string("model: ") + e.what());
  }
}

inline json model_to_json(const KripkeModel& m) {
  json edges = json::array();
  for (auto [u, v] : m.edges()) edges.push_back({m.world_name(u), m.world_name(v)});
  json val = json::object();
  for (const auto& [p, ws] : m.valuations()) {
    json names = json::array();
    ws.for_each([&](std::size_t w) { names.push_back(m.world_name(w)); });
    val[p] = std::move(names);
  }
  return {{"worlds", m.world_names()}, {"edges", std::move(edges)}, {"valuation", std::move(val)}};
}

inline WorldTeam team_from_json(const KripkeModel& m, const json& j) {
  try {
    return m.team(j.at("team").get<std::vector<std::string>>());
  } catch (const json::exception& e) {
    throw FormatError(std::string("team: ") + e.what());
  }
}

inline json team_to_json(const KripkeModel& m, const WorldTeam& t) {
  json names = json::array();
  t.for_each([&](std::size_t w) { names.push_back(m.world_name(w)); });
  return {{"team", std::move(names)}};
}

inline PropTeam prop_team_from_json(const json& j) {
  try {
    auto domain = j.at("domain").get<std::vector<std::string>>();
    std::vector<Bits> rows;
    for (const auto& a : j.at("assignments")) {
      Bits row;
      for (const auto& v : a) {
        const int b = v.is_boolean() ? static_cast<int>(v.get<bool>()) : v.get<int>();
        if (b != 0 && b != 1) throw FormatError("prop team: values must be 0 or 1");
        row.push_back(b == 1);
      }
      rows.push_back(std::move(row));
    }
    return PropTeam(std::move(domain), std::move(rows));
  } catch (const json::exception& e) {
    throw FormatError(std::string("prop team: ") + e.what());
  }
}

inline json prop_team_to_json(const PropTeam& x) {
  json rows = json::array();
  for (const auto& r : x.rows()) {
    json row = json::array();
    for (bool b : r) row.push_back(b ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return {{"domain", x.domain().names()}, {"assignments", std::move(rows)}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError("'" + path + "': " + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace inclogic
