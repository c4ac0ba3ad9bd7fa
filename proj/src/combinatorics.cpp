#include "arrangeproj/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace arrangeproj {

namespace {

std::string block_string(const Block& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(b[i]);
  }
  return s + "}";
}

// Checks blocks are nonempty, disjoint and cover [n]; sorts each block.
void normalize_blocks(int n, std::vector<Block>& blocks) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::size_t total = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block in partition");
    std::sort(b.begin(), b.end());
    for (Vertex v : b) {
      if (v < 1 || v > n) throw std::invalid_argument("block element outside [n]");
      if (seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("blocks are not disjoint");
      seen[static_cast<std::size_t>(v - 1)] = true;
      ++total;
    }
  }
  if (total != static_cast<std::size_t>(n))
    throw std::invalid_argument("blocks do not cover [n]");
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n), adjacency_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [i, j] : edges) {
    if (i > j) std::swap(i, j);
    if (i == j) throw std::invalid_argument("loop at vertex " + std::to_string(i));
    if (i < 1 || j > n) throw std::invalid_argument("edge endpoint outside [n]");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  const auto un = static_cast<std::size_t>(n);
  for (auto [i, j] : edges_) {
    const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
    adjacency_[a * un + b] = adjacency_[b * un + a] = 1;
  }
}

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

bool Graph::has_edge(Vertex u, Vertex w) const {
  if (u < 1 || w < 1 || u > n_ || w > n_) return false;
  return adjacency_[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(w - 1)] != 0;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  for (Vertex w = 1; w <= n_; ++w)
    if (has_edge(u, w)) out.push_back(w);
  return out;
}

bool Graph::induces_connected(std::span<const Vertex> vertices) const {
  if (vertices.empty()) return false;
  std::vector<bool> reached(vertices.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < vertices.size(); ++b) {
      if (!reached[b] && has_edge(vertices[a], vertices[b])) {
        reached[b] = true;
        ++count;
        stack.push_back(b);
      }
    }
  }
  return count == vertices.size();
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> e;
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++bit)
      if (mask >> bit & 1u) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

std::vector<Graph> all_graphs(int n) {
  const int pairs = n * (n - 1) / 2;
  if (pairs >= 63) throw std::invalid_argument("too many vertices to enumerate graphs");
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) out.push_back(graph_from_mask(n, m));
  return out;
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<Vertex> word) : word_(std::move(word)) {
  const auto n = word_.size();
  std::vector<bool> seen(n, false);
  for (Vertex v : word_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("word is not a permutation of [n]");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<Vertex>(word_.rbegin(), word_.rend()));
}

std::vector<std::size_t> Permutation::positions() const {
  std::vector<std::size_t> pos(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) pos[static_cast<std::size_t>(word_[i] - 1)] = i;
  return pos;
}

std::string Permutation::to_string() const {
  // Single digits concatenate ("213"); larger n needs separators.
  const bool spaced = word_.size() > 9;
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (spaced && i) s += ' ';
    s += std::to_string(word_[i]);
  }
  return s;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Vertex> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// ---------------------------------------------------------------- partitions

OrderedSetPartition::OrderedSetPartition(int n, std::vector<Block> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  normalize_blocks(n_, blocks_);
}

std::string OrderedSetPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ',';
    s += block_string(blocks_[i]);
  }
  return s + ")";
}

SetPartition::SetPartition(int n, std::vector<Block> blocks)
    : n_(n), blocks_(std::move(blocks)), block_index_(static_cast<std::size_t>(n)) {
  normalize_blocks(n_, blocks_);
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (Vertex v : blocks_[k]) block_index_[static_cast<std::size_t>(v - 1)] = k;
}

SetPartition SetPartition::singletons(int n) {
  std::vector<Block> b;
  for (Vertex v = 1; v <= n; ++v) b.push_back({v});
  return SetPartition(n, std::move(b));
}

SetPartition SetPartition::from(const OrderedSetPartition& ordered) {
  return SetPartition(ordered.ground_size(), ordered.blocks());
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (n_ != coarser.n_) return false;
  for (const auto& b : blocks_) {
    const auto target = coarser.block_of(b.front());
    for (Vertex v : b)
      if (coarser.block_of(v) != target) return false;
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::string s;
  for (const auto& b : blocks_) s += block_string(b);
  return s;
}

std::vector<SetPartition> all_set_partitions(int n) {
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  const auto emit = [&] {
    const int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Block> blocks(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    out.emplace_back(n, std::move(blocks));
  };
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    emit();
    int i = n - 1;
    while (i > 0 && rgs[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i <= 0) break;
    ++rgs[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      rgs[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

std::vector<OrderedSetPartition> all_ordered_set_partitions(int n) {
  std::vector<OrderedSetPartition> out;
  for (const auto& p : all_set_partitions(n)) {
    std::vector<std::size_t> order(p.block_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
      std::vector<Block> blocks;
      for (std::size_t k : order) blocks.push_back(p.blocks()[k]);
      out.emplace_back(n, std::move(blocks));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

// ---------------------------------------------------------------- orientations

AcyclicOrientation::AcyclicOrientation(Graph graph, std::vector<Vertex> heads)
    : graph_(std::move(graph)), heads_(std::move(heads)),
      out_(static_cast<std::size_t>(graph_.vertex_count())) {
  const auto& edges = graph_.edges();
  if (heads_.size() != edges.size()) throw std::invalid_argument("one head per edge required");
  std::vector<int> indegree(out_.size(), 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [i, j] = edges[k];
    const Vertex h = heads_[k];
    if (h != i && h != j) throw std::invalid_argument("head is not an endpoint of its edge");
    const Vertex t = h == i ? j : i;
    out_[static_cast<std::size_t>(t - 1)].push_back(h);
    ++indegree[static_cast<std::size_t>(h - 1)];
  }
  for (auto& o : out_) std::sort(o.begin(), o.end());
  // Kahn's algorithm: acyclic iff every vertex gets removed.
  std::vector<Vertex> ready;
  for (std::size_t v = 0; v < out_.size(); ++v)
    if (indegree[v] == 0) ready.push_back(static_cast<Vertex>(v + 1));
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex h : out_neighbors(v))
      if (--indegree[static_cast<std::size_t>(h - 1)] == 0) ready.push_back(h);
  }
  if (removed != out_.size()) throw std::invalid_argument("orientation has a directed cycle");
}

std::vector<Edge> AcyclicOrientation::arcs() const {
  std::vector<Edge> out;
  const auto& edges = graph_.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Vertex h = heads_[k];
    out.emplace_back(h == edges[k].first ? edges[k].second : edges[k].first, h);
  }
  return out;
}

std::string AcyclicOrientation::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto [t, h] : arcs()) {
    if (!first) os << ' ';
    first = false;
    os << t << "->" << h;
  }
  return first ? "-" : os.str();
}

// ---------------------------------------------------------------- statistics

RightToLeftMinima rl_min(const Permutation& sigma) {
  RightToLeftMinima r{0, {}};
  const auto& w = sigma.word();
  Vertex suffix_min = static_cast<Vertex>(w.size()) + 1;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] < suffix_min) {
      suffix_min = w[i];
      r.positions.push_back(i + 1);
    }
  }
  std::reverse(r.positions.begin(), r.positions.end());
  r.count = r.positions.size();
  return r;
}

std::size_t lr_max(const Permutation& sigma) {
  std::size_t count = 0;
  Vertex prefix_max = 0;
  for (Vertex x : sigma.word()) {
    if (x > prefix_max) {
      prefix_max = x;
      ++count;
    }
  }
  return count;
}

std::vector<Vertex> reachable_set(const AcyclicOrientation& gamma, Vertex i) {
  const int n = gamma.graph().vertex_count();
  if (i < 1 || i > n) throw std::invalid_argument("vertex outside [n]");
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  in[static_cast<std::size_t>(i - 1)] = true;
  // Iterated arc expansion until no new vertex is added.
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex v = 1; v <= n; ++v) {
      if (!in[static_cast<std::size_t>(v - 1)]) continue;
      for (Vertex h : gamma.out_neighbors(v)) {
        if (!in[static_cast<std::size_t>(h - 1)]) {
          in[static_cast<std::size_t>(h - 1)] = true;
          grew = true;
        }
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v)
    if (in[static_cast<std::size_t>(v - 1)]) out.push_back(v);
  return out;
}

OrderedSetPartition source_components(const AcyclicOrientation& gamma) {
  const int n = gamma.graph().vertex_count();
  std::vector<bool> assigned(static_cast<std::size_t>(n), false);
  std::vector<Block> blocks;
  for (Vertex m = 1; m <= n; ++m) {
    if (assigned[static_cast<std::size_t>(m - 1)]) continue;
    Block component;
    for (Vertex v : reachable_set(gamma, m)) {
      if (!assigned[static_cast<std::size_t>(v - 1)]) {
        assigned[static_cast<std::size_t>(v - 1)] = true;
        component.push_back(v);
      }
    }
    blocks.push_back(std::move(component));
  }
  return OrderedSetPartition(n, std::move(blocks));
}

std::vector<AcyclicOrientation> enumerate_acyclic_orientations(const Graph& g) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  if (m >= 63) throw std::invalid_argument("too many edges to enumerate orientations");
  std::vector<AcyclicOrientation> out;
  std::vector<Vertex> heads(m);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    for (std::size_t k = 0; k < m; ++k) {
      const bool upper = code >> (m - 1 - k) & 1u;
      heads[k] = upper ? edges[k].second : edges[k].first;
    }
    try {
      out.emplace_back(g, heads);
    } catch (const std::invalid_argument&) {
      // cyclic; skip
    }
  }
  return out;
}

AcyclicOrientation orientation_of_permutation(const Graph& g, const Permutation& sigma) {
  if (sigma.size() != g.vertex_count()) throw std::invalid_argument("permutation size mismatch");
  const auto pos = sigma.positions();
  std::vector<Vertex> heads;
  heads.reserve(g.edge_count());
  for (auto [i, j] : g.edges())
    heads.push_back(pos[static_cast<std::size_t>(i - 1)] < pos[static_cast<std::size_t>(j - 1)] ? i : j);
  return AcyclicOrientation(g, std::move(heads));
}

std::vector<Permutation> linear_extensions(const AcyclicOrientation& gamma) {
  std::vector<Permutation> out;
  const auto arcs = gamma.arcs();
  for (auto& sigma : all_permutations(gamma.graph().vertex_count())) {
    const auto pos = sigma.positions();
    const bool ok = std::all_of(arcs.begin(), arcs.end(), [&](const Edge& a) {
      return pos[static_cast<std::size_t>(a.second - 1)] < pos[static_cast<std::size_t>(a.first - 1)];
    });
    if (ok) out.push_back(std::move(sigma));
  }
  return out;
}

Permutation lex_min_extension(const AcyclicOrientation& gamma) {
  const int n = gamma.graph().vertex_count();
  std::vector<bool> emitted(static_cast<std::size_t>(n), false);
  std::vector<Vertex> word;
  word.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(word.size()) < n) {
    for (Vertex v = 1; v <= n; ++v) {
      if (emitted[static_cast<std::size_t>(v - 1)]) continue;
      const auto& need = gamma.out_neighbors(v);
      if (std::all_of(need.begin(), need.end(),
                      [&](Vertex h) { return emitted[static_cast<std::size_t>(h - 1)]; })) {
        emitted[static_cast<std::size_t>(v - 1)] = true;
        word.push_back(v);
        break;
      }
    }
  }
  return Permutation(std::move(word));
}

OrderedSetPartition partition_at_rl_minima(const Permutation& sigma) {
  const auto minima = rl_min(sigma);
  std::vector<Block> blocks;
  std::size_t start = 0;
  for (std::size_t p : minima.positions) {
    blocks.emplace_back(sigma.word().begin() + static_cast<std::ptrdiff_t>(start),
                        sigma.word().begin() + static_cast<std::ptrdiff_t>(p));
    start = p;
  }
  return OrderedSetPartition(sigma.size(), std::move(blocks));
}

}  // namespace arrangeproj
