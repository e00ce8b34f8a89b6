#include "isored/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "isored/error.hpp"

namespace isored {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::ParseError, message); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    fail("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
}

RatFunc weight_of(const Json& w, const std::string& where) {
  if (w.is_string()) {
    try {
      return parse_ratfunc(w.get<std::string>());
    } catch (const Error& e) {
      fail(where + ": " + e.what());
    }
  }
  if (w.is_number_integer()) return RatFunc(Gauss(Rational(w.get<long>())));
  fail(where + ": expected a literal string or an integer");
}

std::size_t positive_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  const long v = j.get<long>();
  if (v < 1) throw Error(ErrorCode::BadVertexIndex, where + ": index " + std::to_string(v) + " is not positive");
  return static_cast<std::size_t>(v);
}

}  // namespace

Network parse_network(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) fail("network document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long>() < 0) {
    fail("network document needs a nonnegative integer \"n\"");
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<long>());
  Network net(n);
  if (doc.contains("edges")) {
    const Json& edges = doc["edges"];
    if (!edges.is_array()) fail("\"edges\" must be an array");
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const Json& e = edges[k];
      const std::string where = "edge " + std::to_string(k);
      if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("w")) {
        fail(where + ": expected an object with \"from\", \"to\" and \"w\"");
      }
      const Vertex from = positive_index(e["from"], where + " from");
      const Vertex to = positive_index(e["to"], where + " to");
      if (from > n || to > n) {
        throw Error(ErrorCode::BadVertexIndex, where + ": vertex " + std::to_string(std::max(from, to)) +
                                                   " out of range 1.." + std::to_string(n));
      }
      if (!seen.insert({from, to}).second) {
        throw Error(ErrorCode::DuplicateEdge,
                    where + ": duplicate edge " + std::to_string(from) + " -> " + std::to_string(to));
      }
      net.set_edge(from, to, weight_of(e["w"], where + " weight"));
    }
  }
  if (doc.contains("labels")) {
    const Json& labels = doc["labels"];
    if (!labels.is_array() || labels.size() != n) fail("\"labels\" must be an array with one entry per vertex");
    std::vector<std::size_t> values;
    for (std::size_t k = 0; k < n; ++k) values.push_back(positive_index(labels[k], "label " + std::to_string(k)));
    try {
      net.set_labels(std::move(values));
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return net;
}

Json network_to_json(const Network& net) {
  Json doc;
  doc["n"] = net.size();
  doc["edges"] = Json::array();
  for (const auto& [edge, w] : net.edges()) {
    doc["edges"].push_back({{"from", edge.first}, {"to", edge.second}, {"w", to_string(w)}});
  }
  bool identity = true;
  for (Vertex v = 1; v <= net.size(); ++v) identity = identity && net.label(v) == v;
  if (!identity) doc["labels"] = net.labels();
  return doc;
}

RatMatrix parse_matrix(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    fail("matrix document needs a \"rows\" array");
  }
  const Json& rows = doc["rows"];
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : (rows[0].is_array() ? rows[0].size() : 0);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) fail("row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = weight_of(rows[i][j], "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  return m;
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}};
}

Json matrix_to_json(const GaussMatrix& m) { return matrix_to_json(to_ratmatrix(m)); }

GaussVector parse_gauss_list(std::string_view text) {
  GaussVector out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    out.push_back(parse_gauss(item));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

Json vector_to_json(const GaussVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

VertexSet parse_vertex_list(std::string_view text) {
  VertexSet out;
  while (true) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      fail("bad vertex '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

}  // namespace isored
