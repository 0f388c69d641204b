#include "prd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>
#include <tuple>

namespace prd {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph() : offsets_{0} {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : offsets_(n + 1, 0) {
  if (n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
    throw std::invalid_argument("vertex count exceeds label range");
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw std::invalid_argument("edge label out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];

  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    targets_[fill[u]++] = v;
    targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; static_cast<std::size_t>(u) < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

// Component ids ordered by smallest member; returns the number of components.
std::size_t label_components(const Graph& g, std::vector<std::size_t>& component) {
  const std::size_t n = g.order();
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  component.assign(n, kUnset);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; static_cast<std::size_t>(s) < n; ++s) {
    if (component[s] != kUnset) continue;
    component[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (component[w] == kUnset) {
          component[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source,
                                       std::vector<Vertex>* parent = nullptr,
                                       std::vector<Vertex>* order = nullptr) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kUnset);
  if (parent) parent->assign(g.order(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnset) {
        dist[w] = dist[v] + 1;
        if (parent) (*parent)[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (order) *order = std::move(queue);
  return dist;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tree / Forest

Tree::Tree(Graph g) : graph_(std::move(g)) {
  const std::size_t n = graph_.order();
  if (n == 0) throw std::invalid_argument("a tree needs at least one vertex");
  if (graph_.size() != n - 1) {
    throw std::invalid_argument("a tree on " + std::to_string(n) + " vertices needs " +
                                std::to_string(n - 1) + " edges, got " +
                                std::to_string(graph_.size()));
  }
  std::vector<std::size_t> component;
  if (label_components(graph_, component) != 1) {
    throw std::invalid_argument("graph is not connected");
  }
}

Forest::Forest(Graph g) : Forest(std::move(g), {}) {}

Forest::Forest(Graph g, std::vector<Vertex> original_labels)
    : graph_(std::move(g)), original_(std::move(original_labels)) {
  component_count_ = label_components(graph_, component_);
  if (graph_.size() + component_count_ != graph_.order()) {
    throw std::invalid_argument("graph contains a cycle");
  }
  if (original_.empty()) {
    original_.resize(graph_.order());
    for (std::size_t v = 0; v < original_.size(); ++v) original_[v] = static_cast<Vertex>(v);
  } else if (original_.size() != graph_.order()) {
    throw std::invalid_argument("relabeling map has the wrong length");
  }
}

std::vector<std::size_t> Forest::component_sizes() const {
  std::vector<std::size_t> sizes(component_count_, 0);
  for (std::size_t c : component_) ++sizes[c];
  return sizes;
}

Relabeled induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  if (keep.size() != g.order()) throw std::invalid_argument("mask length differs from order");
  std::vector<Vertex> fresh(g.order(), -1);
  Relabeled out;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (keep[v]) {
      fresh[v] = static_cast<Vertex>(out.original.size());
      out.original.push_back(static_cast<Vertex>(v));
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (keep[u] && keep[v]) edges.emplace_back(fresh[u], fresh[v]);
  }
  out.graph = Graph(out.original.size(), edges);
  return out;
}

// ---------------------------------------------------------------------------
// Edge list

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r";
  auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

// Parses whitespace-separated non-negative integers; false on anything else.
bool parse_numbers(std::string_view s, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || value < 0) return false;
    std::size_t next = static_cast<std::size_t>(ptr - s.data());
    if (next < s.size() && s[next] != ' ' && s[next] != '\t') return false;
    out.push_back(value);
    i = next;
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<long long> numbers;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_count = false;
  long long n = 0;
  std::vector<std::tuple<Vertex, Vertex, std::size_t>> seen;

  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;

    if (!parse_numbers(line, numbers)) {
      throw ParseError("malformed line '" + std::string(line) + "'", line_no);
    }
    if (!have_count) {
      if (numbers.size() != 1) throw ParseError("expected the vertex count", line_no);
      n = numbers[0];
      if (n > std::numeric_limits<Vertex>::max()) {
        throw ParseError("vertex count too large", line_no);
      }
      have_count = true;
      continue;
    }
    if (numbers.size() != 2) throw ParseError("expected 'u v'", line_no);
    if (numbers[0] >= n || numbers[1] >= n) {
      throw ParseError("label out of range (n = " + std::to_string(n) + ")", line_no);
    }
    auto u = static_cast<Vertex>(numbers[0]);
    auto v = static_cast<Vertex>(numbers[1]);
    if (u == v) throw ParseError("self-loop at " + std::to_string(u), line_no);
    seen.emplace_back(std::min(u, v), std::max(u, v), line_no);
  }
  if (!have_count) throw ParseError("empty input: missing vertex count", 1);

  std::stable_sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::vector<Edge> edges;
  edges.reserve(seen.size());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    auto [u, v, line] = seen[i];
    if (i > 0 && std::get<0>(seen[i - 1]) == u && std::get<1>(seen[i - 1]) == v) {
      // Report whichever occurrence comes later in the file.
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v),
                       std::max(line, std::get<2>(seen[i - 1])));
    }
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr std::uint64_t kMaxGraph6Order = 1u << 20;

void check_printable(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: character " + std::to_string(c) + " at offset " +
                       std::to_string(i) + " is outside 63..126");
    }
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  while (!text.empty() && text.back() == '\n') text = trim(text.substr(0, text.size() - 1));
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  check_printable(text);

  auto byte = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i]) - 63; };
  std::uint64_t n = 0;
  std::size_t header = 0;
  if (text[0] != '~') {
    n = byte(0);
    header = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("graph6: bad length (truncated size field)");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    header = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: bad length (truncated size field)");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    header = 8;
  }
  if (n > kMaxGraph6Order) throw SizeLimitError("graph6: order " + std::to_string(n) + " too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (text.size() - header != body) {
    throw ParseError("graph6: bad length (expected " + std::to_string(header + body) +
                     " bytes for n = " + std::to_string(n) + ", got " +
                     std::to_string(text.size()) + ")");
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      std::uint64_t chunk = byte(header + k / 6);
      if ((chunk >> (5 - k % 6)) & 1u) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::string body((bits + 5) / 6, 0);
  for (auto [u, v] : g.edges()) {
    // u < v: bit index of (u, v) in column-major upper-triangle order
    std::uint64_t k = static_cast<std::uint64_t>(v) * (v - 1) / 2 + static_cast<std::uint64_t>(u);
    body[k / 6] = static_cast<char>(body[k / 6] | (1 << (5 - k % 6)));
  }
  for (char& c : body) c = static_cast<char>(c + 63);
  return out + body;
}

// ---------------------------------------------------------------------------
// Named trees

Tree make_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("make_path: n must be at least 1");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
  }
  return Tree(Graph(n, edges));
}

Tree make_star(std::size_t k) {
  if (k == 0) throw std::invalid_argument("make_star: k must be at least 1");
  std::vector<Edge> edges;
  for (std::size_t leaf = 1; leaf <= k; ++leaf) edges.emplace_back(0, static_cast<Vertex>(leaf));
  return Tree(Graph(k + 1, edges));
}

Tree make_double_star(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("make_double_star: p and q must be at least 1");
  std::vector<Edge> edges{{0, 1}};
  Vertex next = 2;
  for (std::size_t i = 0; i < p; ++i) edges.emplace_back(0, next++);
  for (std::size_t i = 0; i < q; ++i) edges.emplace_back(1, next++);
  return Tree(Graph(p + q + 2, edges));
}

Tree make_spider(std::span<const std::size_t> legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : legs) {
    if (len == 0) throw std::invalid_argument("make_spider: legs must have positive length");
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree(Graph(static_cast<std::size_t>(next), edges));
}

// ---------------------------------------------------------------------------
// Structural queries

std::vector<Vertex> leaves_of(const Tree& t, Vertex v) {
  if (!t.contains(v)) throw std::out_of_range("leaves_of: vertex out of range");
  std::vector<Vertex> out;
  for (Vertex w : t.neighbors(v)) {
    if (t.degree(w) == 1) out.push_back(w);
  }
  return out;
}

std::vector<Vertex> longest_path(const Tree& t) {
  const Graph& g = t.graph();
  if (g.order() == 1) return {0};

  auto d0 = bfs_distances(g, 0);
  auto a = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto da = bfs_distances(g, a);
  auto b = static_cast<Vertex>(std::max_element(da.begin(), da.end()) - da.begin());
  auto db = bfs_distances(g, b);
  const std::size_t diam = da[b];

  // Eccentricity in a tree is the distance to the nearer-or-farther end of a
  // diameter, so the lowest start label is the first vertex reaching diam.
  Vertex start = 0;
  while (std::max(da[start], db[start]) != diam) ++start;

  std::vector<Vertex> parent, order;
  auto depth = bfs_distances(g, start, &parent, &order);
  std::vector<std::size_t> reach(g.order(), 0);  // deepest depth in subtree
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    reach[v] = std::max(reach[v], depth[v]);
    if (parent[v] >= 0) reach[parent[v]] = std::max(reach[parent[v]], reach[v]);
  }

  std::vector<Vertex> path{start};
  Vertex cur = start;
  while (depth[cur] < diam) {
    for (Vertex w : g.neighbors(cur)) {
      if (parent[w] == cur && reach[w] == diam) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

std::size_t diameter(const Tree& t) { return longest_path(t).size() - 1; }

Forest remove_vertex(const Tree& t, Vertex v) {
  if (!t.contains(v)) throw std::out_of_range("remove_vertex: vertex out of range");
  std::vector<bool> keep(t.order(), true);
  keep[v] = false;
  auto cut = induced_subgraph(t.graph(), keep);
  return Forest(std::move(cut.graph), std::move(cut.original));
}

}  // namespace prd
