#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "prd/graph.hpp"

namespace prd {

/// AHU encoding of an unrooted tree: the tree is rooted at its centroid
/// (the lexicographically smaller encoding when there are two), every vertex
/// is written as "(" + children + ")" with children in lexicographically
/// increasing order. Two trees have equal forms iff they are isomorphic.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string code) : code_(std::move(code)) {}

  const std::string& str() const noexcept { return code_; }
  std::size_t order() const noexcept { return code_.size() / 2; }

  /// FNV-1a over the encoding; stable across platforms.
  std::uint64_t digest() const noexcept;

  auto operator<=>(const CanonicalForm&) const = default;

 private:
  std::string code_;
};

/// One or two centroids, ascending.
std::vector<Vertex> centroids(const Tree& t);

/// AHU encoding of t rooted at `root`.
std::string rooted_encoding(const Tree& t, Vertex root);

CanonicalForm canonical_form(const Tree& t);

/// Decodes a canonical form (or any balanced rooted encoding) into a tree
/// labeled in preorder, root 0.
Tree tree_from_encoding(const std::string& code);

/// Labeled tree on `n` vertices from a Prüfer sequence of length n - 2.
Tree tree_from_prufer(std::span<const Vertex> sequence, std::size_t n);

/// Uniformly random labeled tree (random Prüfer sequence).
Tree random_tree(std::size_t n, std::mt19937_64& rng);

inline constexpr std::size_t kMaxEnumerationOrder = 18;

/// One representative per isomorphism class on n vertices, ordered by
/// canonical form. Each tree is labeled as decoded from its form.
/// Throws SizeLimitError unless 1 <= n <= kMaxEnumerationOrder.
std::vector<Tree> enumerate_free_trees(std::size_t n);

/// Streaming variant of enumerate_free_trees; same trees, same order.
void for_each_free_tree(std::size_t n, const std::function<void(const Tree&)>& visit);

}  // namespace prd
