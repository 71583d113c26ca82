#include "judicious/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "judicious/bounds.hpp"
#include "judicious/error.hpp"

namespace jp {

namespace {

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  int number = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    fn(number, text.substr(start, end - start));
    if (end == text.size()) break;
    start = end + 1;
  }
}

std::int64_t parse_label(std::string_view tok, int line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": '" + std::string(tok) +
                                     "' is not a non-negative integer label");
  return value;
}

}  // namespace

int LabeledGraph::index_of(std::int64_t label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return -1;
  return static_cast<int>(it - labels.begin());
}

LabeledGraph parse_edge_list(std::string_view text) {
  struct RawEdge {
    std::int64_t u, v;
  };
  std::vector<RawEdge> raw;
  std::map<std::pair<std::int64_t, std::int64_t>, int> seen;
  for_each_line(text, [&](int line, std::string_view s) {
    auto tok = tokens(strip_comment(s));
    if (tok.empty()) return;
    if (tok.size() != 2)
      fail(ErrorCode::parse_error,
           "line " + std::to_string(line) + ": expected two vertex labels \"u v\"");
    std::int64_t u = parse_label(tok[0], line);
    std::int64_t v = parse_label(tok[1], line);
    if (u == v)
      fail(ErrorCode::parse_error,
           "line " + std::to_string(line) + ": self-loop on vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    auto [it, fresh] = seen.emplace(key, line);
    if (!fresh)
      fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": duplicate edge " +
                                       std::to_string(u) + " " + std::to_string(v) +
                                       " (first given on line " + std::to_string(it->second) + ")");
    raw.push_back({u, v});
  });

  LabeledGraph out;
  for (auto e : raw) {
    out.labels.push_back(e.u);
    out.labels.push_back(e.v);
  }
  std::sort(out.labels.begin(), out.labels.end());
  out.labels.erase(std::unique(out.labels.begin(), out.labels.end()), out.labels.end());
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto e : raw) edges.emplace_back(out.index_of(e.u), out.index_of(e.v));
  out.graph = Graph(static_cast<int>(out.labels.size()), edges);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Partition parse_parts(std::string_view text, const LabeledGraph& g, int min_parts) {
  std::vector<std::vector<int>> parts;
  std::vector<int> line_of(static_cast<std::size_t>(g.graph.n()), 0);
  for_each_line(text, [&](int line, std::string_view s) {
    auto tok = tokens(strip_comment(s));
    if (tok.empty()) return;
    auto& part = parts.emplace_back();
    for (auto t : tok) {
      std::int64_t label = parse_label(t, line);
      int v = g.index_of(label);
      if (v < 0)
        fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": vertex " +
                                         std::to_string(label) + " does not occur in the graph");
      if (line_of[v] != 0)
        fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": vertex " +
                                         std::to_string(label) + " already placed on line " +
                                         std::to_string(line_of[v]));
      line_of[v] = line;
      part.push_back(v);
    }
  });
  for (int v = 0; v < g.graph.n(); ++v)
    if (line_of[v] == 0)
      fail(ErrorCode::parse_error,
           "vertex " + std::to_string(g.labels[v]) + " is not assigned to any part");
  while (static_cast<int>(parts.size()) < min_parts) parts.emplace_back();
  if (parts.empty()) parts.emplace_back();
  return partition_from_parts(g.graph, parts);
}

std::string format_parts(const Partition& p, const LabeledGraph& g) {
  std::string out;
  for (const auto& part : p.parts()) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(g.labels[part[i]]);
    }
    out += '\n';
  }
  return out;
}

namespace {

nlohmann::json partition_fields(const LabeledGraph& g, const Partition& p) {
  nlohmann::json j;
  j["k"] = p.k();
  j["n"] = g.graph.n();
  j["m"] = g.graph.m();
  j["h_of_m"] = h(g.graph.m());
  auto parts = p.parts();
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& part : parts) {
    nlohmann::json row = nlohmann::json::array();
    for (int v : part) row.push_back(g.labels[v]);
    labels.push_back(std::move(row));
  }
  j["parts"] = parts;
  j["part_labels"] = std::move(labels);
  j["internal_counts"] = std::vector<std::int64_t>(p.internal_counts().begin(),
                                                   p.internal_counts().end());
  j["crossing"] = p.crossing();
  return j;
}

nlohmann::json bound_json(const BoundCheck& b) {
  return {{"name", b.name},
          {"relation", b.upper ? "<=" : ">="},
          {"required", b.required.to_double()},
          {"required_exact", b.required.str()},
          {"achieved", b.achieved},
          {"pass", b.pass},
          {"tight", b.tight}};
}

}  // namespace

nlohmann::json certificate_json(const LabeledGraph& g, const Partition& p,
                                const JudiciousCertificate& cert) {
  nlohmann::json j = {{"theorem", theorem_name(cert.theorem)},
                      {"branch", branch_name(cert.branch)}};
  j.update(partition_fields(g, p));
  nlohmann::json bounds = nlohmann::json::array();
  for (const auto& b : cert.bounds) bounds.push_back(bound_json(b));
  j["bounds"] = std::move(bounds);
  j["all_pass"] = cert.all_pass();
  j["empty_parts"] = cert.empty_parts;
  if (!cert.detail.empty()) j["detail"] = cert.detail;
  if (cert.beta1) {
    j["beta1"] = cert.beta1->to_double();
    j["beta1_exact"] = cert.beta1->str();
    j["d0"] = cert.d0;
    j["d1"] = cert.d1;
  }
  if (cert.a) j["a"] = *cert.a;
  if (cert.b) j["b"] = *cert.b;
  if (cert.g_a) j["g_a"] = *cert.g_a;
  if (cert.g_b) j["g_b"] = *cert.g_b;
  if (cert.c) j["c"] = *cert.c;
  if (!cert.restart_keys.empty()) {
    nlohmann::json keys = nlohmann::json::array();
    for (const auto& key : cert.restart_keys) keys.push_back(key.sorted);
    j["restart_keys"] = std::move(keys);
  }
  j["diagnostics"] = cert.diagnostics;
  return j;
}

nlohmann::json cut_certificate_json(const LabeledGraph& g, const Partition& p,
                                    const std::string& branch, const RootValue& required) {
  BoundCheck b;
  b.name = "crossing";
  b.required = required;
  b.achieved = p.crossing();
  b.upper = false;
  b.pass = required <= b.achieved;
  b.tight = required == b.achieved;
  nlohmann::json j = {{"theorem", "balanced_cut"}, {"branch", branch}};
  j.update(partition_fields(g, p));
  j["bounds"] = nlohmann::json::array({bound_json(b)});
  j["all_pass"] = b.pass;
  return j;
}

}  // namespace jp
