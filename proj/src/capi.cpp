#include "judicious/jp.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "judicious/bounds.hpp"
#include "judicious/cut_construct.hpp"
#include "judicious/error.hpp"
#include "judicious/harness.hpp"
#include "judicious/io.hpp"
#include "judicious/judicious.hpp"

struct jp_graph {
  jp::LabeledGraph g;
};

struct jp_result {
  jp::Partition partition;
  bool all_pass = false;
  std::string certificate;
  std::string parts;
};

namespace {

thread_local std::string last_error;

jp_status to_status(jp::ErrorCode code) {
  switch (code) {
    case jp::ErrorCode::invalid_argument: return JP_ERR_INVALID_ARGUMENT;
    case jp::ErrorCode::parse_error: return JP_ERR_PARSE;
    case jp::ErrorCode::too_large: return JP_ERR_TOO_LARGE;
    case jp::ErrorCode::falsified: return JP_ERR_FALSIFIED;
  }
  return JP_ERR_INTERNAL;
}

template <class Fn>
jp_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return JP_OK;
  } catch (const jp::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return JP_ERR_INTERNAL;
}

void check_out(const void* p) { jp::require(p != nullptr, "null argument"); }

jp_result* judicious_result(const jp_graph* g, const jp::JudiciousResult& r) {
  auto* out = new jp_result;
  out->partition = r.partition;
  out->all_pass = r.certificate.all_pass();
  out->certificate = jp::certificate_json(g->g, r.partition, r.certificate).dump(2);
  out->parts = jp::format_parts(r.partition, g->g);
  return out;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

jp_status run_sweep(const jp::SweepConfig& config, char** summary_json, int* all_pass) {
  return guarded([&] {
    check_out(summary_json);
    auto summary = jp::run_sweep(config);
    *summary_json = copy_string(summary.to_json(config).dump(2));
    if (all_pass) *all_pass = summary.all_pass() ? 1 : 0;
  });
}

}  // namespace

extern "C" {

const char* jp_last_error(void) { return last_error.c_str(); }

const char* jp_version(void) { return "0.1.0"; }

jp_status jp_graph_parse(const char* text, jp_graph** out) {
  return guarded([&] {
    check_out(text);
    check_out(out);
    *out = new jp_graph{jp::parse_edge_list(text)};
  });
}

jp_status jp_graph_load(const char* path, jp_graph** out) {
  return guarded([&] {
    check_out(path);
    check_out(out);
    *out = new jp_graph{jp::parse_edge_list(jp::read_text_file(path))};
  });
}

jp_status jp_graph_from_edges(int n, const int* edges, size_t num_edges, jp_graph** out) {
  return guarded([&] {
    check_out(out);
    jp::require(n >= 0, "vertex count must be non-negative");
    jp::require(num_edges == 0 || edges != nullptr, "null edge array");
    std::vector<jp::Edge> list;
    for (size_t i = 0; i < num_edges; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    jp::LabeledGraph g;
    g.graph = jp::Graph(n, list);
    for (int v = 0; v < n; ++v) g.labels.push_back(v);
    *out = new jp_graph{std::move(g)};
  });
}

void jp_graph_free(jp_graph* g) { delete g; }

int jp_graph_num_vertices(const jp_graph* g) { return g ? g->g.graph.n() : 0; }

int64_t jp_graph_num_edges(const jp_graph* g) { return g ? g->g.graph.m() : 0; }

jp_status jp_partition2(const jp_graph* g, jp_result** out) {
  return guarded([&] {
    check_out(g);
    check_out(out);
    *out = judicious_result(g, jp::judicious_2partition(g->g.graph));
  });
}

jp_status jp_partition3(const jp_graph* g, jp_result** out) {
  return guarded([&] {
    check_out(g);
    check_out(out);
    *out = judicious_result(g, jp::judicious_3partition(g->g.graph));
  });
}

jp_status jp_partition_small(const jp_graph* g, int k, jp_result** out) {
  return guarded([&] {
    check_out(g);
    check_out(out);
    *out = judicious_result(g, jp::judicious_k_small(g->g.graph, k));
  });
}

jp_status jp_maxcut(const jp_graph* g, int k, jp_result** out) {
  return guarded([&] {
    check_out(g);
    check_out(out);
    auto cut = jp::balanced_kcut(g->g.graph, k);
    auto* r = new jp_result;
    r->partition = cut.partition;
    r->all_pass = cut.guarantee <= cut.achieved;
    auto doc = jp::cut_certificate_json(g->g, cut.partition, cut.branch, cut.guarantee);
    doc["class_balanced"] = cut.class_balanced;
    if (cut.formula_exceeds_m) doc["formula_exceeds_m"] = true;
    r->certificate = doc.dump(2);
    r->parts = jp::format_parts(cut.partition, g->g);
    *out = r;
  });
}

jp_status jp_verify(const jp_graph* g, const char* parts_text, const char* theorem,
                    jp_result** out) {
  return guarded([&] {
    check_out(g);
    check_out(parts_text);
    check_out(theorem);
    check_out(out);
    const jp::Theorem t = jp::parse_theorem(theorem);
    const int min_parts = t == jp::Theorem::t14 ? 2 : 3;
    jp::Partition p = jp::parse_parts(parts_text, g->g, min_parts);
    jp::JudiciousResult r{p, jp::verify_judicious(g->g.graph, p, t)};
    *out = judicious_result(g, r);
  });
}

int jp_result_all_pass(const jp_result* r) { return r && r->all_pass ? 1 : 0; }

int jp_result_num_parts(const jp_result* r) { return r ? r->partition.k() : 0; }

size_t jp_result_assignment(const jp_result* r, int* out, size_t cap) {
  if (!r) return 0;
  auto a = r->partition.assignment();
  for (size_t i = 0; i < a.size() && i < cap && out; ++i) out[i] = a[i];
  return a.size();
}

int64_t jp_result_crossing(const jp_result* r) { return r ? r->partition.crossing() : 0; }

const char* jp_result_certificate_json(const jp_result* r) { return r ? r->certificate.c_str() : ""; }

const char* jp_result_parts_text(const jp_result* r) { return r ? r->parts.c_str() : ""; }

void jp_result_free(jp_result* r) { delete r; }

jp_status jp_sweep_all_graphs(int n, int k, int jobs, char** summary_json, int* all_pass) {
  jp::SweepConfig c;
  c.mode = jp::SweepConfig::Mode::all_graphs;
  c.n = n;
  c.k = k;
  c.jobs = jobs;
  return run_sweep(c, summary_json, all_pass);
}

jp_status jp_sweep_random(int n, double p, int count, uint64_t seed, int k, int jobs,
                          char** summary_json, int* all_pass) {
  jp::SweepConfig c;
  c.mode = jp::SweepConfig::Mode::random;
  c.n = n;
  c.p = p;
  c.count = count;
  c.seed = seed;
  c.k = k;
  c.jobs = jobs;
  return run_sweep(c, summary_json, all_pass);
}

void jp_string_free(char* s) { delete[] s; }

}  // extern "C"
