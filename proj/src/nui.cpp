#include "arrangeproj/nui.hpp"

#include <charconv>
#include <functional>

#include "arrangeproj/errors.hpp"

namespace arrangeproj {

CVector::CVector(std::vector<int> c) : c_(std::move(c)) {
  if (c_.empty()) throw InvalidCVector("c-vector must be nonempty");
  int prev_gap = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const int j = static_cast<int>(k) + 1;
    if (c_[k] < 0 || c_[k] > j - 1)
      throw InvalidCVector("c_" + std::to_string(j) + " = " + std::to_string(c_[k]) + " outside [0, " +
                           std::to_string(j - 1) + "]");
    const int gap = j - c_[k];
    if (gap < prev_gap) throw InvalidCVector("j - c_j decreases at j = " + std::to_string(j));
    prev_gap = gap;
  }
}

CVector CVector::parse(const std::string& text) {
  std::vector<int> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    std::string_view field(text.data() + pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size())
      throw InvalidCVector("malformed c-vector '" + text + "'");
    c.push_back(value);
    pos = comma + 1;
  }
  return CVector(std::move(c));
}

std::string CVector::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(c_[k]);
  }
  return s;
}

std::vector<CVector> all_c_vectors(int n) {
  std::vector<CVector> out;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> extend = [&](int j, int min_gap) {
    if (j > n) {
      out.emplace_back(c);
      return;
    }
    // gap = j - c_j ranges over [max(min_gap, 1), j].
    for (int cj = 0; cj <= j - 1; ++cj) {
      if (j - cj < min_gap) break;
      c[static_cast<std::size_t>(j - 1)] = cj;
      extend(j + 1, j - cj);
    }
  };
  extend(1, 1);
  return out;
}

bool is_nui(const Graph& g) {
  for (auto [i, j] : g.edges())
    for (Vertex k = i + 1; k < j; ++k)
      if (!g.has_edge(i, k) || !g.has_edge(k, j)) return false;
  return true;
}

CVector c_vector(const Graph& g) {
  if (!is_nui(g)) throw NotNUI();
  std::vector<int> c(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto [i, j] : g.edges()) ++c[static_cast<std::size_t>(j - 1)];
  return CVector(std::move(c));
}

Graph nui_from_c_vector(const CVector& c) {
  std::vector<Edge> edges;
  for (int j = 1; j <= c.size(); ++j)
    for (int i = j - c[static_cast<std::size_t>(j - 1)]; i < j; ++i) edges.emplace_back(i, j);
  return Graph(c.size(), std::move(edges));
}

namespace {

bool all_descents_are_edges(const Graph& g, const Permutation& sigma) {
  const auto& w = sigma.word();
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1] && !g.has_edge(w[i], w[i + 1])) return false;
  return true;
}

}  // namespace

bool is_g_local_min(const Graph& g, const Permutation& sigma) {
  if (!is_nui(g)) throw NotNUI();
  if (sigma.size() != g.vertex_count()) throw std::invalid_argument("permutation size mismatch");
  return all_descents_are_edges(g, sigma);
}

std::vector<Permutation> enumerate_g_local_minima(const Graph& g) {
  if (!is_nui(g)) throw NotNUI();
  std::vector<Permutation> out;
  for (auto& sigma : all_permutations(g.vertex_count()))
    if (all_descents_are_edges(g, sigma)) out.push_back(std::move(sigma));
  return out;
}

IntPolynomial rlmin_generating_sum(const Graph& g) {
  IntPolynomial sum;
  for (const auto& sigma : enumerate_g_local_minima(g)) sum += IntPolynomial::monomial(rl_min(sigma).count);
  return sum;
}

IntPolynomial product_char_poly(const CVector& c) {
  IntPolynomial p{1};
  for (int cj : c.values()) p = p * IntPolynomial{-cj, 1};
  return p;
}

IntPolynomial rising_product(const CVector& c) {
  IntPolynomial p{1};
  for (int cj : c.values()) p = p * IntPolynomial{cj, 1};
  return p;
}

NuiProjectionReport nui_projection_check(const Graph& g, const RationalPoint& v) {
  if (!is_nui(g)) throw NotNUI();
  if (!validate_point_graphical(v, g.vertex_count()))
    throw InvalidPoint("point " + v.to_string() + " violates v_i > (6n^2+1) v_{i+1}, v_n > 0");
  const auto lattice = bond_lattice(g);
  NuiProjectionReport report{true, {}};
  for (auto& gamma : enumerate_acyclic_orientations(g)) {
    const auto projection = project_onto_region_oracle(gamma, v, lattice);
    auto sigma = lex_min_extension(gamma);
    const auto minima = rl_min(sigma).count;

    bool sorted = true;
    for (std::size_t i = 0; i + 1 < sigma.word().size(); ++i)
      if (projection.point.at(sigma[i]) < projection.point.at(sigma[i + 1])) sorted = false;

    const auto cut = SetPartition::from(partition_at_rl_minima(sigma));
    bool connected = cut == projection.face.partition();
    for (const auto& b : projection.face.partition().blocks()) connected = connected && g.induces_connected(b);

    NuiRegionCheck check{std::move(gamma), std::move(sigma), minima, projection.pd,
                         projection.pd == minima, sorted, connected};
    report.holds = report.holds && check.pd_matches && check.in_lex_min_region && check.face_connected;
    report.regions.push_back(std::move(check));
  }
  return report;
}

}  // namespace arrangeproj
