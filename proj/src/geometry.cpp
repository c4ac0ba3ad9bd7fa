#include "arrangeproj/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "arrangeproj/errors.hpp"

namespace arrangeproj {

namespace {

mpz_class power(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

void require_dimension(const RationalPoint& v, int n) {
  if (v.dimension() != n) throw std::invalid_argument("point dimension does not match n");
}

}  // namespace

// ---------------------------------------------------------------- points

RationalPoint::RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

RationalPoint RationalPoint::from_integers(const std::vector<long>& coords) {
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (long x : coords) c.emplace_back(x);
  return RationalPoint(std::move(c));
}

std::string RationalPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += coords_[i].get_str();
  }
  return s + ")";
}

Rational squared_distance(const RationalPoint& a, const RationalPoint& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    const Rational d = a.coords()[i] - b.coords()[i];
    sum += d * d;
  }
  return sum;
}

RationalPoint braid_generic_point(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Rational> c;
  for (int i = 1; i <= n; ++i) c.emplace_back(power(static_cast<unsigned long>(n) + 1, static_cast<unsigned long>(n - i)));
  return RationalPoint(std::move(c));
}

RationalPoint graphical_generic_point(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const auto base = 6ul * static_cast<unsigned long>(n) * static_cast<unsigned long>(n) + 2;
  std::vector<Rational> c;
  for (int i = 1; i <= n; ++i) c.emplace_back(power(base, static_cast<unsigned long>(n - i)));
  return RationalPoint(std::move(c));
}

RationalPoint lrmax_generic_point(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Rational> c;
  for (int i = 1; i <= n; ++i)
    c.emplace_back(1 - power(static_cast<unsigned long>(n) + 2, static_cast<unsigned long>(i - 1)));
  return RationalPoint(std::move(c));
}

bool validate_point_braid(const RationalPoint& v, int n) {
  if (v.dimension() != n) return false;
  const auto& x = v.coords();
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (!(x[i] > x[i + 1])) return false;
    if (!(x[i] - x[i + 1] > n * (x[i + 1] - x.back()))) return false;
  }
  return true;
}

bool validate_point_graphical(const RationalPoint& v, int n) {
  if (v.dimension() != n) return false;
  const auto& x = v.coords();
  const long factor = 6l * n * n + 1;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (!(x[i] > factor * x[i + 1])) return false;
  return x.back() > 0;
}

bool validate_point_lrmax(const RationalPoint& v, int n) {
  if (v.dimension() != n) return false;
  const auto& x = v.coords();
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (!(x[i] > x[i + 1])) return false;
    if (!(x[i] - x[i + 1] > n * (x.front() - x[i]))) return false;
  }
  return true;
}

RationalPoint project_onto_flat(const RationalPoint& v, const SetPartition& pi) {
  require_dimension(v, pi.ground_size());
  std::vector<Rational> out(v.coords().size());
  for (const auto& block : pi.blocks()) {
    Rational mean = 0;
    for (Vertex i : block) mean += v.at(i);
    mean /= static_cast<long>(block.size());
    for (Vertex i : block) out[static_cast<std::size_t>(i - 1)] = mean;
  }
  return RationalPoint(std::move(out));
}

// ---------------------------------------------------------------- faces

namespace {

using BlockPair = std::pair<std::size_t, std::size_t>;

// Unordered block pairs joined by an edge, as (low index, high index), sorted.
std::vector<BlockPair> quotient_adjacencies(const Graph& g, const SetPartition& p) {
  std::vector<BlockPair> adj;
  for (auto [u, w] : g.edges()) {
    const auto a = p.block_of(u), b = p.block_of(w);
    if (a != b) adj.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(adj.begin(), adj.end());
  adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  return adj;
}

bool acyclic_relation(std::size_t nodes, const std::vector<BlockPair>& arcs) {
  std::vector<std::size_t> indegree(nodes, 0);
  for (auto [hi, lo] : arcs) ++indegree[lo];
  std::vector<std::size_t> ready;
  for (std::size_t b = 0; b < nodes; ++b)
    if (indegree[b] == 0) ready.push_back(b);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const auto b = ready.back();
    ready.pop_back();
    ++removed;
    for (auto [hi, lo] : arcs)
      if (hi == b && --indegree[lo] == 0) ready.push_back(lo);
  }
  return removed == nodes;
}

}  // namespace

GraphicalFace::GraphicalFace(const Graph& g, ConnectedPartition flat, std::vector<BlockPair> dominance)
    : flat_(std::move(flat)), dominance_(std::move(dominance)) {
  std::sort(dominance_.begin(), dominance_.end());
  std::vector<BlockPair> covered;
  for (auto [hi, lo] : dominance_) covered.emplace_back(std::min(hi, lo), std::max(hi, lo));
  std::sort(covered.begin(), covered.end());
  if (covered != quotient_adjacencies(g, flat_.partition()))
    throw std::invalid_argument("dominance must order each adjacent block pair exactly once");
  if (!acyclic_relation(flat_.block_count(), dominance_))
    throw std::invalid_argument("block dominance has a cycle");
}

bool GraphicalFace::dominates(std::size_t a, std::size_t b) const {
  return std::binary_search(dominance_.begin(), dominance_.end(), BlockPair{a, b});
}

std::optional<OrderedSetPartition> GraphicalFace::increasing_minima_representative() const {
  // Blocks are stored by increasing minimum, so that order is the only
  // candidate; it is valid iff every dominance points forward.
  for (auto [hi, lo] : dominance_)
    if (hi > lo) return std::nullopt;
  const auto& p = flat_.partition();
  return OrderedSetPartition(p.ground_size(), p.blocks());
}

std::string GraphicalFace::to_string() const {
  const auto& blocks = flat_.blocks();
  const auto block_str = [&](std::size_t k) {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks[k].size(); ++i) {
      if (i) s += ',';
      s += std::to_string(blocks[k][i]);
    }
    return s + "}";
  };
  if (dominance_.empty()) return flat_.partition().to_string();
  std::string s;
  for (std::size_t i = 0; i < dominance_.size(); ++i) {
    if (i) s += ' ';
    s += block_str(dominance_[i].first) + ">" + block_str(dominance_[i].second);
  }
  return s;
}

GraphicalFace face_from_ordered_partition(const Graph& g, const OrderedSetPartition& pi) {
  ConnectedPartition flat(g, SetPartition::from(pi));
  std::vector<std::size_t> rank(static_cast<std::size_t>(pi.ground_size()));
  for (std::size_t k = 0; k < pi.block_count(); ++k)
    for (Vertex v : pi.blocks()[k]) rank[static_cast<std::size_t>(v - 1)] = k;
  const auto& p = flat.partition();
  std::vector<BlockPair> dominance;
  for (auto [u, w] : g.edges()) {
    const auto a = p.block_of(u), b = p.block_of(w);
    if (a == b) continue;
    const bool u_higher = rank[static_cast<std::size_t>(u - 1)] < rank[static_cast<std::size_t>(w - 1)];
    dominance.push_back(u_higher ? BlockPair{a, b} : BlockPair{b, a});
  }
  std::sort(dominance.begin(), dominance.end());
  dominance.erase(std::unique(dominance.begin(), dominance.end()), dominance.end());
  return GraphicalFace(g, std::move(flat), std::move(dominance));
}

std::optional<GraphicalFace> face_in_region(const AcyclicOrientation& gamma, const ConnectedPartition& flat) {
  const auto& g = gamma.graph();
  const auto& p = flat.partition();
  std::vector<BlockPair> dominance;
  for (auto [tail, head] : gamma.arcs()) {
    const auto a = p.block_of(head), b = p.block_of(tail);
    if (a != b) dominance.emplace_back(a, b);
  }
  std::sort(dominance.begin(), dominance.end());
  dominance.erase(std::unique(dominance.begin(), dominance.end()), dominance.end());
  for (std::size_t i = 0; i < dominance.size(); ++i)
    if (std::binary_search(dominance.begin(), dominance.end(), BlockPair{dominance[i].second, dominance[i].first}))
      return std::nullopt;  // two edges disagree on the same block pair
  if (!acyclic_relation(p.block_count(), dominance)) return std::nullopt;
  return GraphicalFace(g, flat, std::move(dominance));
}

std::vector<GraphicalFace> faces_of_region(const AcyclicOrientation& gamma,
                                           const std::vector<ConnectedPartition>& lattice) {
  std::vector<GraphicalFace> out;
  for (const auto& flat : lattice)
    if (auto f = face_in_region(gamma, flat)) out.push_back(std::move(*f));
  return out;
}

std::vector<GraphicalFace> faces_of_region(const Graph& g, const AcyclicOrientation& gamma) {
  if (!(gamma.graph() == g)) throw std::invalid_argument("orientation belongs to another graph");
  return faces_of_region(gamma, bond_lattice(g));
}

namespace {

bool in_relative_interior(const Graph& g, const RationalPoint& p, const GraphicalFace& face) {
  const auto& part = face.partition();
  for (auto [u, w] : g.edges()) {
    const auto a = part.block_of(u), b = part.block_of(w);
    if (a == b) continue;
    if (face.dominates(a, b) ? !(p.at(u) > p.at(w)) : !(p.at(w) > p.at(u))) return false;
  }
  return true;
}

}  // namespace

bool is_good_face(const Graph& g, const RationalPoint& v, const GraphicalFace& face) {
  return in_relative_interior(g, project_onto_flat(v, face.partition()), face);
}

bool good_face_min_criterion(const OrderedSetPartition& pi) {
  const auto& b = pi.blocks();
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (!(b[i].front() < b[i + 1].front())) return false;
  return true;
}

// ---------------------------------------------------------------- projections

ProjectionResult project_onto_region_closed_form(const Graph& g, const AcyclicOrientation& gamma,
                                                 const RationalPoint& v) {
  const int n = g.vertex_count();
  if (!validate_point_graphical(v, n))
    throw InvalidPoint("point " + v.to_string() + " violates v_i > (6n^2+1) v_{i+1}, v_n > 0");
  const auto components = source_components(gamma);
  ConnectedPartition flat(g, SetPartition::from(components));
  auto face = face_in_region(gamma, flat);
  if (!face) throw std::logic_error("source-component flat carries no face of the region");
  return {project_onto_flat(v, flat.partition()), std::move(*face), components.block_count()};
}

std::vector<GoodFace> good_faces_of_region(const AcyclicOrientation& gamma, const RationalPoint& v,
                                           const std::vector<ConnectedPartition>& lattice) {
  const auto& g = gamma.graph();
  require_dimension(v, g.vertex_count());
  std::vector<GoodFace> out;
  for (auto& face : faces_of_region(gamma, lattice)) {
    auto p = project_onto_flat(v, face.partition());
    if (!in_relative_interior(g, p, face)) continue;
    Rational d = squared_distance(v, p);
    out.push_back({std::move(face), std::move(p), std::move(d)});
  }
  return out;
}

std::size_t nearest_candidate(const std::vector<GoodFace>& candidates) {
  if (candidates.empty()) throw std::invalid_argument("no candidate faces");
  std::size_t best = 0;
  bool tied = false;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const int c = cmp(candidates[i].squared_distance, candidates[best].squared_distance);
    if (c < 0) {
      best = i;
      tied = false;
    } else if (c == 0) {
      tied = true;
    }
  }
  if (tied)
    throw NonGenericPoint("two good faces tie at squared distance " +
                          candidates[best].squared_distance.get_str());
  return best;
}

ProjectionResult project_onto_region_oracle(const AcyclicOrientation& gamma, const RationalPoint& v,
                                            const std::vector<ConnectedPartition>& lattice) {
  auto candidates = good_faces_of_region(gamma, v, lattice);
  auto& best = candidates[nearest_candidate(candidates)];
  const auto pd = best.face.dimension();
  return {std::move(best.point), std::move(best.face), pd};
}

ProjectionResult project_onto_region_oracle(const Graph& g, const AcyclicOrientation& gamma,
                                            const RationalPoint& v) {
  if (!(gamma.graph() == g)) throw std::invalid_argument("orientation belongs to another graph");
  return project_onto_region_oracle(gamma, v, bond_lattice(g));
}

RationalPoint pava_chain_projection(const RationalPoint& v, const Permutation& sigma) {
  require_dimension(v, sigma.size());
  struct Pool {
    Rational sum;
    long size;
  };
  std::vector<Pool> pools;
  for (Vertex s : sigma.word()) {
    pools.push_back({v.at(s), 1});
    // The chain is non-increasing: merge while an earlier mean is below a later one.
    while (pools.size() >= 2) {
      const auto& last = pools.back();
      const auto& prev = pools[pools.size() - 2];
      if (prev.sum * last.size >= last.sum * prev.size) break;
      Pool merged{prev.sum + last.sum, prev.size + last.size};
      pools.pop_back();
      pools.back() = std::move(merged);
    }
  }
  std::vector<Rational> out(v.coords().size());
  std::size_t k = 0;
  for (const auto& pool : pools) {
    const Rational mean = pool.sum / pool.size;
    for (long i = 0; i < pool.size; ++i, ++k) out[static_cast<std::size_t>(sigma[k] - 1)] = mean;
  }
  return RationalPoint(std::move(out));
}

IntPolynomial char_poly_via_projection(const Graph& g, const RationalPoint& v) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (!validate_point_graphical(v, g.vertex_count()))
    throw InvalidPoint("point " + v.to_string() + " violates v_i > (6n^2+1) v_{i+1}, v_n > 0");
  std::vector<mpz_class> coeffs(n + 1, mpz_class(0));
  for (const auto& gamma : enumerate_acyclic_orientations(g)) {
    const auto pd = project_onto_region_closed_form(g, gamma, v).pd;
    coeffs[pd] += (n - pd) % 2 == 0 ? 1 : -1;
  }
  return IntPolynomial(std::move(coeffs));
}

bool prefix_containment_check(const AcyclicOrientation& gamma, const RationalPoint& v,
                              const std::vector<ConnectedPartition>& lattice) {
  const auto sources = source_components(gamma);
  const auto n = static_cast<std::size_t>(gamma.graph().vertex_count());
  for (const auto& good : good_faces_of_region(gamma, v, lattice)) {
    const auto rep = good.face.increasing_minima_representative();
    if (!rep) return false;
    std::vector<bool> in_b(n, false), in_d(n, false);
    for (std::size_t j = 0; j < sources.block_count(); ++j) {
      for (Vertex x : sources.blocks()[j]) in_b[static_cast<std::size_t>(x - 1)] = true;
      if (j < rep->block_count())
        for (Vertex x : rep->blocks()[j]) in_d[static_cast<std::size_t>(x - 1)] = true;
      for (std::size_t x = 0; x < n; ++x)
        if (in_b[x] && !in_d[x]) return false;
    }
  }
  return true;
}

bool prefix_containment_check(const Graph& g, const AcyclicOrientation& gamma, const RationalPoint& v) {
  if (!(gamma.graph() == g)) throw std::invalid_argument("orientation belongs to another graph");
  return prefix_containment_check(gamma, v, bond_lattice(g));
}

}  // namespace arrangeproj
