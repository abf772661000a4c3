#include "nichols/json_io.hpp"

#include <stdexcept>

namespace nichols {

namespace {

using nlohmann::json;

i64 int_field(const json& j, const char* key) {
  if (!j.contains(key))
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string("field \"") + key +
                                "\" must be an integer");
  return v.get<i64>();
}

std::pair<i64, int> header_of(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  const i64 n = int_field(j, "n");
  const i64 rank = int_field(j, "rank");
  if (n < 1) throw std::invalid_argument("\"n\" must be positive");
  if (rank < 1 || rank > 64)
    throw std::invalid_argument("\"rank\" out of range");
  return {n, static_cast<int>(rank)};
}

i64 int_entry(const json& v, const char* where) {
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string(where) + " must hold integers");
  return v.get<i64>();
}

}  // namespace

nlohmann::json matrix_json(const BraidingMatrix& b) {
  json j;
  j["n"] = b.n;
  j["rank"] = b.rank;
  j["exponents"] = b.exponents;
  return j;
}

BraidingMatrix matrix_of_json(const nlohmann::json& j) {
  const auto [n, rank] = header_of(j);
  if (!j.contains("exponents") || !j.at("exponents").is_array())
    throw std::invalid_argument("missing array field \"exponents\"");
  const auto& rows = j.at("exponents");
  if (rows.size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("\"exponents\" must have rank rows");
  std::vector<std::vector<i64>> a;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(rank))
      throw std::invalid_argument("\"exponents\" rows must have rank entries");
    std::vector<i64> r;
    for (const auto& v : row) r.push_back(int_entry(v, "\"exponents\""));
    a.push_back(std::move(r));
  }
  return braiding_matrix(n, a);  // reduces mod n
}

nlohmann::json gdd_json(const Gdd& g) {
  json j;
  j["n"] = g.n;
  j["rank"] = g.rank;
  j["diag"] = g.diag;
  json edges = json::object();
  for (int i = 0; i < g.rank; ++i)
    for (int k = i + 1; k < g.rank; ++k)
      if (g.has_edge(i, k))
        edges[std::to_string(i + 1) + "," + std::to_string(k + 1)] =
            g.e(i, k);
  j["edges"] = edges;
  return j;
}

Gdd gdd_of_json(const nlohmann::json& j) {
  const auto [n, rank] = header_of(j);
  if (!j.contains("diag") || !j.at("diag").is_array() ||
      j.at("diag").size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("\"diag\" must be an array of rank entries");
  std::vector<i64> diag;
  for (const auto& v : j.at("diag")) diag.push_back(int_entry(v, "\"diag\""));
  std::vector<GddEdge> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_object())
      throw std::invalid_argument("\"edges\" must be an object");
    for (const auto& [key, val] : j.at("edges").items()) {
      const auto comma = key.find(',');
      std::size_t parsed_a = 0, parsed_b = 0;
      int a = 0, b = 0;
      try {
        a = std::stoi(key.substr(0, comma), &parsed_a);
        b = std::stoi(key.substr(comma + 1), &parsed_b);
      } catch (const std::exception&) {
        parsed_a = std::string::npos;
      }
      if (comma == std::string::npos ||
          parsed_a != comma || parsed_b != key.size() - comma - 1)
        throw std::invalid_argument("edge key \"" + key +
                                    "\" is not of the form \"i,j\"");
      if (a < 1 || b < 1 || a > rank || b > rank || a == b)
        throw std::invalid_argument("edge key \"" + key +
                                    "\" is out of range");
      edges.push_back({a - 1, b - 1, int_entry(val, "\"edges\"")});
    }
  }
  return gdd(n, diag, edges);  // reduces mod n, drops zero edges
}

nlohmann::json witness_json(const Realization& r) {
  json j;
  j["x"] = r.x;
  j["y"] = r.y;
  return j;
}

nlohmann::json summary_json(const NicholsSummary& s) {
  json j;
  j["label"] = to_string(s.label);
  j["pbw"] = json::array();
  for (const auto& w : s.pbw) j["pbw"].push_back(to_string(w));
  j["dimension"] = s.dimension ? json(*s.dimension) : json();
  return j;
}

}  // namespace nichols
