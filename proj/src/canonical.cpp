#include "prd/canonical.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace prd {

std::uint64_t CanonicalForm::digest() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : code_) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

struct Rooting {
  std::vector<Vertex> parent;
  std::vector<Vertex> order;  // BFS order from the root
  std::vector<std::size_t> depth;
};

Rooting root_at(const Tree& t, Vertex root) {
  Rooting r;
  const std::size_t n = t.order();
  r.parent.assign(n, -1);
  r.depth.assign(n, 0);
  r.order.reserve(n);
  r.order.push_back(root);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    Vertex v = r.order[head];
    for (Vertex w : t.neighbors(v)) {
      if (w != r.parent[v]) {
        r.parent[w] = v;
        r.depth[w] = r.depth[v] + 1;
        r.order.push_back(w);
      }
    }
  }
  return r;
}

// Order of child-rank sequences matching the lexicographic order of the
// encodings they produce: elementwise, and when one sequence is a prefix of
// the other the longer one sorts first ('(' < ')').
bool encoding_less(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() > b.size();
}

}  // namespace

std::vector<Vertex> centroids(const Tree& t) {
  const std::size_t n = t.order();
  auto r = root_at(t, 0);
  std::vector<std::size_t> size(n, 1);
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    if (r.parent[*it] >= 0) size[r.parent[*it]] += size[*it];
  }
  std::vector<std::size_t> heaviest(n, 0);
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    std::size_t worst = n - size[v];
    for (Vertex w : t.neighbors(v)) {
      if (w != r.parent[v]) worst = std::max(worst, size[w]);
    }
    heaviest[v] = worst;
  }
  std::size_t best = *std::min_element(heaviest.begin(), heaviest.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    if (heaviest[v] == best) out.push_back(v);
  }
  return out;
}

std::string rooted_encoding(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  auto r = root_at(t, root);

  // Rank vertices level by level, deepest first. Children of one vertex share
  // a level, so ranks only need to be comparable within a level.
  std::vector<int> rank(n, 0);
  std::vector<std::vector<int>> key(n);
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v : r.order) {
    if (r.parent[v] >= 0) children[r.parent[v]].push_back(v);
  }

  std::size_t end = n;
  while (end > 0) {
    std::size_t begin = end;
    const std::size_t d = r.depth[r.order[end - 1]];
    while (begin > 0 && r.depth[r.order[begin - 1]] == d) --begin;

    std::vector<Vertex> level(r.order.begin() + static_cast<std::ptrdiff_t>(begin),
                              r.order.begin() + static_cast<std::ptrdiff_t>(end));
    for (Vertex v : level) {
      auto& k = key[v];
      k.clear();
      for (Vertex c : children[v]) k.push_back(rank[c]);
      std::sort(k.begin(), k.end());
      std::sort(children[v].begin(), children[v].end(),
                [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
    }
    std::sort(level.begin(), level.end(),
              [&](Vertex a, Vertex b) { return encoding_less(key[a], key[b]); });
    int next = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i > 0 && encoding_less(key[level[i - 1]], key[level[i]])) ++next;
      rank[level[i]] = next;
    }
    end = begin;
  }

  std::string out;
  out.reserve(2 * n);
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  out.push_back('(');
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children[v].size()) {
      Vertex c = children[v][next++];
      out.push_back('(');
      stack.emplace_back(c, 0);
    } else {
      out.push_back(')');
      stack.pop_back();
    }
  }
  return out;
}

CanonicalForm canonical_form(const Tree& t) {
  auto roots = centroids(t);
  std::string best = rooted_encoding(t, roots[0]);
  if (roots.size() == 2) best = std::min(best, rooted_encoding(t, roots[1]));
  return CanonicalForm(std::move(best));
}

Tree tree_from_encoding(const std::string& code) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] == '(') {
      if (i > 0 && stack.empty()) throw std::invalid_argument("encoding has several roots");
      if (!stack.empty()) edges.emplace_back(stack.back(), next);
      stack.push_back(next++);
    } else if (code[i] == ')') {
      if (stack.empty()) throw std::invalid_argument("unbalanced encoding");
      stack.pop_back();
    } else {
      throw std::invalid_argument("encoding may only contain parentheses");
    }
  }
  if (!stack.empty() || next == 0) throw std::invalid_argument("unbalanced encoding");
  return Tree(Graph(static_cast<std::size_t>(next), edges));
}

Tree tree_from_prufer(std::span<const Vertex> sequence, std::size_t n) {
  if (n == 0) throw std::invalid_argument("tree_from_prufer: n must be positive");
  if (n == 1) {
    if (!sequence.empty()) throw std::invalid_argument("tree_from_prufer: K1 has no sequence");
    return Tree(Graph(1, {}));
  }
  if (sequence.size() != n - 2) throw std::invalid_argument("tree_from_prufer: length must be n - 2");

  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw std::invalid_argument("tree_from_prufer: label out of range");
    }
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : sequence) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree(Graph(n, edges));
}

Tree random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n < 2) return tree_from_prufer({}, std::max<std::size_t>(n, 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& v : seq) v = static_cast<Vertex>(rng() % n);
  return tree_from_prufer(seq, n);
}

namespace {

// Grows every class on k + 1 vertices by hanging a leaf anywhere on every
// class on k vertices.
std::set<std::string> grow(const std::set<std::string>& level) {
  std::set<std::string> next;
  for (const auto& code : level) {
    Tree t = tree_from_encoding(code);
    auto edges = t.graph().edges();
    const auto n = static_cast<Vertex>(t.order());
    edges.emplace_back(0, n);
    for (Vertex v = 0; v < n; ++v) {
      edges.back() = {v, n};
      next.insert(canonical_form(Tree(Graph(t.order() + 1, edges))).str());
    }
  }
  return next;
}

std::set<std::string> free_tree_codes(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw SizeLimitError("free-tree enumeration supports 1 <= n <= " +
                         std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  }
  std::set<std::string> level{"()"};
  for (std::size_t k = 1; k < n; ++k) level = grow(level);
  return level;
}

}  // namespace

std::vector<Tree> enumerate_free_trees(std::size_t n) {
  std::vector<Tree> out;
  for_each_free_tree(n, [&](const Tree& t) { out.push_back(t); });
  return out;
}

void for_each_free_tree(std::size_t n, const std::function<void(const Tree&)>& visit) {
  for (const auto& code : free_tree_codes(n)) visit(tree_from_encoding(code));
}

}  // namespace prd
