#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "judicious/jp.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

int status_exit(jp_status s) {
  std::cerr << "error: " << jp_last_error() << "\n";
  return s == JP_ERR_FALSIFIED ? kExitFail : kExitInput;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

struct Graph {
  jp_graph* g = nullptr;
  ~Graph() { jp_graph_free(g); }
};

struct Result {
  jp_result* r = nullptr;
  ~Result() { jp_result_free(r); }
};

struct Outputs {
  std::string cert_path;
  std::string parts_path;
};

// Certificate to --out (or stdout), partition to --parts (or stdout when the
// certificate went to a file).
int emit(const Result& res, const Outputs& out) {
  const std::string cert = std::string(jp_result_certificate_json(res.r)) + "\n";
  const std::string parts = jp_result_parts_text(res.r);
  if (out.cert_path.empty()) {
    std::cout << cert;
  } else if (!write_file(out.cert_path, cert)) {
    return kExitInput;
  }
  if (!out.parts_path.empty()) {
    if (!write_file(out.parts_path, parts)) return kExitInput;
  } else if (!out.cert_path.empty()) {
    std::cout << parts;
  }
  return jp_result_all_pass(res.r) ? kExitPass : kExitFail;
}

template <class Fn>
int run_on_graph(const std::string& path, const Outputs& out, Fn&& construct) {
  Graph g;
  if (jp_status s = jp_graph_load(path.c_str(), &g.g); s != JP_OK) return status_exit(s);
  Result res;
  if (jp_status s = construct(g.g, &res.r); s != JP_OK) return status_exit(s);
  return emit(res, out);
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("JP_SEED");
  if (!s || !*s) return std::nullopt;
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(s, &used, 0);
    if (used == std::string(s).size()) return v;
  } catch (...) {
  }
  throw CLI::ValidationError("JP_SEED", "not an unsigned integer: '" + std::string(s) + "'");
}

struct RandomSpec {
  int n = 0;
  double p = 0;
  int count = 0;
  std::optional<std::uint64_t> seed;
};

RandomSpec parse_random(const std::string& text) {
  std::vector<std::string> f;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) f.push_back(item);
  if (f.size() != 3 && f.size() != 4)
    throw CLI::ValidationError("--random", "expected n,p,count[,seed]");
  RandomSpec r;
  try {
    std::size_t used = 0;
    r.n = std::stoi(f[0], &used);
    if (used != f[0].size()) throw std::invalid_argument("n");
    r.p = std::stod(f[1], &used);
    if (used != f[1].size()) throw std::invalid_argument("p");
    r.count = std::stoi(f[2], &used);
    if (used != f[2].size()) throw std::invalid_argument("count");
    if (f.size() == 4) {
      r.seed = std::stoull(f[3], &used, 0);
      if (used != f[3].size()) throw std::invalid_argument("seed");
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--random", "malformed value '" + text + "'");
  }
  if (r.n < 0 || r.count < 0 || !(r.p >= 0 && r.p <= 1))
    throw CLI::ValidationError("--random", "need n >= 0, 0 <= p <= 1, count >= 0");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Judicious graph partitions with certified bounds"};
  app.set_version_flag("--version", std::string(jp_version()));
  app.require_subcommand(1);

  std::string edges, parts_in, theorem;
  Outputs out;
  int k = 3;
  int jobs = 1;
  int all_graphs_n = -1;
  std::string random_spec;

  auto* p3 = app.add_subcommand("partition3", "3-partition with both bounds certified");
  p3->add_option("edges", edges, "edge list file")->required();
  p3->add_option("--out", out.cert_path, "write the certificate here");
  p3->add_option("--parts", out.parts_path, "write the partition here");

  auto* p2 = app.add_subcommand("partition2", "2-partition with both bounds certified");
  p2->add_option("edges", edges, "edge list file")->required();
  p2->add_option("--out", out.cert_path, "write the certificate here");
  p2->add_option("--parts", out.parts_path, "write the partition here");

  auto* pk = app.add_subcommand("partitionk", "k-partition for graphs with m < 2k^2");
  pk->add_option("edges", edges, "edge list file")->required();
  pk->add_option("--k", k, "number of parts")->required()->check(CLI::Range(3, 1 << 20));
  pk->add_option("--out", out.cert_path, "write the certificate here");
  pk->add_option("--parts", out.parts_path, "write the partition here");

  auto* mc = app.add_subcommand("maxcut", "balanced k-cut meeting the k-cut bound");
  mc->add_option("edges", edges, "edge list file")->required();
  mc->add_option("--k", k, "number of parts")->required()->check(CLI::Range(2, 1 << 20));
  mc->add_option("--out", out.cert_path, "write the certificate here");
  mc->add_option("--parts", out.parts_path, "write the partition here");

  auto* vf = app.add_subcommand("verify", "check a partition file against a set of bounds");
  vf->add_option("edges", edges, "edge list file")->required();
  vf->add_option("parts", parts_in, "partition file, one part per line")->required();
  vf->add_option("--theorem", theorem, "bound set")
      ->required()
      ->check(CLI::IsMember({"t13", "t14", "t15", "c17"}));
  vf->add_option("--out", out.cert_path, "write the certificate here");

  auto* sw = app.add_subcommand("sweep", "run a construction over a family of graphs");
  auto* all_opt = sw->add_option("--all-graphs", all_graphs_n, "all labeled graphs on N vertices")
                      ->check(CLI::Range(0, 7));
  auto* rnd_opt = sw->add_option("--random", random_spec, "n,p,count[,seed] of G(n,p) samples");
  all_opt->excludes(rnd_opt);
  sw->add_option("--k", k, "number of parts")->check(CLI::Range(2, 64));
  sw->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 1024));
  sw->add_option("--out", out.cert_path, "write the summary here");

  try {
    app.parse(argc, argv);
    if (*sw && !*all_opt && !*rnd_opt)
      throw CLI::ValidationError("sweep", "give --all-graphs N or --random n,p,count[,seed]");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  if (*p3) return run_on_graph(edges, out, [](jp_graph* g, jp_result** r) { return jp_partition3(g, r); });
  if (*p2) return run_on_graph(edges, out, [](jp_graph* g, jp_result** r) { return jp_partition2(g, r); });
  if (*pk)
    return run_on_graph(edges, out, [&](jp_graph* g, jp_result** r) { return jp_partition_small(g, k, r); });
  if (*mc) return run_on_graph(edges, out, [&](jp_graph* g, jp_result** r) { return jp_maxcut(g, k, r); });

  if (*vf) {
    std::ifstream in(parts_in, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open '" << parts_in << "'\n";
      return kExitInput;
    }
    std::stringstream text;
    text << in.rdbuf();
    const std::string parts_text = text.str();
    return run_on_graph(edges, out, [&](jp_graph* g, jp_result** r) {
      return jp_verify(g, parts_text.c_str(), theorem.c_str(), r);
    });
  }

  char* summary = nullptr;
  int all_pass = 0;
  jp_status s;
  try {
    if (*all_opt) {
      s = jp_sweep_all_graphs(all_graphs_n, k, jobs, &summary, &all_pass);
    } else {
      RandomSpec r = parse_random(random_spec);
      std::uint64_t seed = r.seed ? *r.seed : env_seed().value_or(0);
      s = jp_sweep_random(r.n, r.p, r.count, seed, k, jobs, &summary, &all_pass);
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (s != JP_OK) return status_exit(s);
  std::string text = std::string(summary) + "\n";
  jp_string_free(summary);
  if (out.cert_path.empty()) {
    std::cout << text;
  } else if (!write_file(out.cert_path, text)) {
    return kExitInput;
  }
  return all_pass ? kExitPass : kExitFail;
}
