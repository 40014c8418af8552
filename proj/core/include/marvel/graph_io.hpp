#pragma once

#include <filesystem>
#include <iosfwd>

#include "marvel/dag.hpp"
#include "marvel/pdag.hpp"

namespace marvel {

// Edge-list text format. The first non-comment line holds p; every further
// line is one edge. DAG rows are `i j` (i -> j). PDAG rows are `i j d`
// (i -> j) or `i j u` (i - j). Indices are 0-based; `#` starts a comment.
// Malformed input raises std::invalid_argument with the offending line.

[[nodiscard]] Dag read_dag(std::istream& in);
[[nodiscard]] Dag read_dag(const std::filesystem::path& path);
void write_dag(std::ostream& out, const Dag& g);
void write_dag(const std::filesystem::path& path, const Dag& g);

[[nodiscard]] Pdag read_pdag(std::istream& in);
[[nodiscard]] Pdag read_pdag(const std::filesystem::path& path);
void write_pdag(std::ostream& out, const Pdag& g);
void write_pdag(const std::filesystem::path& path, const Pdag& g);

}  // namespace marvel
