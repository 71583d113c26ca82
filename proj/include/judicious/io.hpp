#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "judicious/graph.hpp"
#include "judicious/judicious.hpp"
#include "judicious/partition.hpp"

namespace jp {

/// A graph read from text together with the input label of each vertex.
struct LabeledGraph {
  Graph graph;
  std::vector<std::int64_t> labels;  // dense index -> input label (ascending)

  /// Dense index of a label, or -1.
  int index_of(std::int64_t label) const;
};

/// "u v" per line, '#' starts a comment, blank lines ignored. Labels are
/// non-negative integers, compacted to 0..n-1 in ascending order. Throws
/// Error(parse_error) naming the line on malformed lines, self-loops and
/// duplicate edges.
LabeledGraph parse_edge_list(std::string_view text);

/// Reads a whole file; throws Error(parse_error) if it cannot be opened.
std::string read_text_file(const std::string& path);

/// One part per line as space-separated input labels ('#' comments and blank
/// lines ignored). Every vertex must appear exactly once. When the file has
/// fewer than min_parts lines the partition is padded with empty parts.
Partition parse_parts(std::string_view text, const LabeledGraph& g, int min_parts = 0);

/// Inverse of parse_parts (empty parts become empty lines).
std::string format_parts(const Partition& p, const LabeledGraph& g);

/// Certificate document:
/// {theorem, branch, k, m, h_of_m, parts, part_labels, internal_counts,
///  crossing, bounds: [{name, required, required_exact, achieved, pass,
///  tight}], all_pass, ...} plus the loop data when present.
nlohmann::json certificate_json(const LabeledGraph& g, const Partition& p,
                                const JudiciousCertificate& cert);

/// Certificate for a plain k-cut: one "crossing" bound against `required`.
nlohmann::json cut_certificate_json(const LabeledGraph& g, const Partition& p,
                                    const std::string& branch, const RootValue& required);

}  // namespace jp
