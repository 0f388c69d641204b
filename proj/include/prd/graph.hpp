#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prd {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised by the text parsers. `line()` is 1-based, or 0 when the error is
/// not tied to a particular line (graph6 is a single record).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An input is well-formed but larger than an operation supports.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as CSR with
/// every neighbor list sorted ascending.
class Graph {
 public:
  Graph();

  /// Throws std::invalid_argument on an out-of-range label, a self-loop or a
  /// repeated edge (in either orientation).
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t size() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < order();
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// A connected acyclic graph with at least one vertex.
class Tree {
 public:
  /// Throws std::invalid_argument unless `g` is nonempty, connected and has
  /// exactly n - 1 edges.
  explicit Tree(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }
  std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
  std::size_t degree(Vertex v) const { return graph_.degree(v); }
  bool contains(Vertex v) const noexcept { return graph_.contains(v); }

  bool operator==(const Tree&) const = default;

 private:
  Graph graph_;
};

/// An acyclic graph (possibly empty) with its component partition. When the
/// forest was cut out of a larger graph, `original(v)` gives the label v had
/// there; otherwise it is the identity.
class Forest {
 public:
  /// Throws std::invalid_argument if `g` contains a cycle.
  explicit Forest(Graph g);
  Forest(Graph g, std::vector<Vertex> original_labels);
  explicit Forest(const Tree& t) : Forest(t.graph()) {}

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }
  std::size_t component_count() const noexcept { return component_count_; }
  std::size_t component_of(Vertex v) const { return component_[v]; }
  Vertex original(Vertex v) const { return original_[v]; }
  std::span<const Vertex> original_labels() const noexcept { return original_; }

  /// Component sizes indexed by component id. Ids are assigned in order of
  /// each component's smallest vertex.
  std::vector<std::size_t> component_sizes() const;

 private:
  Graph graph_;
  std::vector<std::size_t> component_;
  std::size_t component_count_ = 0;
  std::vector<Vertex> original_;
};

/// Result of cutting vertices out of a graph: the induced subgraph on the
/// survivors (relabeled densely in increasing order) and the map back.
struct Relabeled {
  Graph graph;
  std::vector<Vertex> original;
};

Relabeled induced_subgraph(const Graph& g, const std::vector<bool>& keep);

// Text formats.

/// First line is the vertex count, then one "u v" pair per line, 0-based.
/// Blank lines are ignored, a trailing newline is optional.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// graph6 without the optional ">>graph6<<" header on output; the header is
/// tolerated on input, as is trailing whitespace.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Named trees.

/// P_n labeled 0-1-...-(n-1).
Tree make_path(std::size_t n);
/// K_{1,k}: center 0, leaves 1..k.
Tree make_star(std::size_t k);
/// DS_{p,q}: centers 0 and 1; leaves 2..p+1 on 0, p+2..p+q+1 on 1.
Tree make_double_star(std::size_t p, std::size_t q);
/// Center 0; legs follow in order, each labeled consecutively outward.
Tree make_spider(std::span<const std::size_t> legs);

// Structural queries.

/// L(v): the neighbors of v that are leaves.
std::vector<Vertex> leaves_of(const Tree& t, Vertex v);

/// A longest path. Among all longest paths, the one starting at the lowest
/// label, and among those the lexicographically smallest sequence.
std::vector<Vertex> longest_path(const Tree& t);
std::size_t diameter(const Tree& t);

/// T - v. The forest keeps the remaining vertices in increasing label order.
Forest remove_vertex(const Tree& t, Vertex v);

}  // namespace prd
