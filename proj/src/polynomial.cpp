#include "arrangeproj/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arrangeproj {

// ---------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const mpz_class& c) {
  std::vector<mpz_class> v(degree + 1, mpz_class(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::reflected() const {
  auto c = coeffs_;
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpz_class(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpz_class(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(IntPolynomial a, const mpz_class& s) {
  for (auto& c : a.coeffs_) c *= s;
  a.trim();
  return a;
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::string IntPolynomial::coeff_list() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) s += ',';
    s += coeffs_[k].get_str();
  }
  return s + "]";
}

mpz_class poly_eval(const IntPolynomial& p, const mpz_class& x) { return p.eval(x); }

// ---------------------------------------------------------------- chromatic

namespace {

// Simple graph as adjacency bitmasks, vertex k <-> bit k.
using AdjMasks = std::vector<std::uint64_t>;

class DeletionContraction {
public:
  IntPolynomial operator()(const AdjMasks& adj) {
    if (auto it = memo_.find(adj); it != memo_.end()) return it->second;
    IntPolynomial result = evaluate(adj);
    memo_.emplace(adj, result);
    return result;
  }

private:
  IntPolynomial evaluate(const AdjMasks& adj) {
    const std::size_t n = adj.size();
    // Pick the first edge (u, w), u < w.
    std::size_t u = 0;
    while (u < n && (adj[u] >> u) == 0) ++u;  // neighbors above u
    if (u == n) return IntPolynomial::monomial(n);
    std::size_t w = u + 1;
    while (!(adj[u] >> w & 1u)) ++w;

    AdjMasks deleted = adj;
    deleted[u] &= ~(std::uint64_t{1} << w);
    deleted[w] &= ~(std::uint64_t{1} << u);

    // Contract w into u (parallel edges collapse), then drop index w.
    AdjMasks merged = deleted;
    merged[u] |= merged[w];
    for (std::size_t x = 0; x < n; ++x)
      if (merged[w] >> x & 1u) merged[x] |= std::uint64_t{1} << u;
    merged[u] &= ~(std::uint64_t{1} << u);
    AdjMasks contracted;
    contracted.reserve(n - 1);
    for (std::size_t x = 0; x < n; ++x) {
      if (x == w) continue;
      const std::uint64_t m = merged[x] & ~(std::uint64_t{1} << w);
      const std::uint64_t low = m & ((std::uint64_t{1} << w) - 1);
      const std::uint64_t high = (m >> (w + 1)) << w;
      contracted.push_back(low | high);
    }
    return (*this)(deleted) - (*this)(contracted);
  }

  std::map<AdjMasks, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial chromatic_deletion_contraction(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 64) throw std::invalid_argument("deletion-contraction supports at most 64 vertices");
  AdjMasks adj(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : g.edges()) {
    adj[static_cast<std::size_t>(i - 1)] |= std::uint64_t{1} << (j - 1);
    adj[static_cast<std::size_t>(j - 1)] |= std::uint64_t{1} << (i - 1);
  }
  return DeletionContraction{}(adj);
}

mpz_class chromatic_by_counting(const Graph& g, unsigned q) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (q == 0) return 0;
  std::vector<unsigned> color(n, 0);
  mpz_class count = 0;
  while (true) {
    bool proper = true;
    for (auto [i, j] : g.edges()) {
      if (color[static_cast<std::size_t>(i - 1)] == color[static_cast<std::size_t>(j - 1)]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    // Odometer increment.
    std::size_t k = 0;
    while (k < n && ++color[k] == q) color[k++] = 0;
    if (k == n) break;
  }
  return count;
}

// ---------------------------------------------------------------- bond lattice

ConnectedPartition::ConnectedPartition(const Graph& g, SetPartition partition)
    : partition_(std::move(partition)) {
  if (partition_.ground_size() != g.vertex_count())
    throw std::invalid_argument("partition ground set does not match graph");
  for (const auto& b : partition_.blocks())
    if (!g.induces_connected(b)) throw std::invalid_argument("block does not induce a connected subgraph");
}

std::vector<ConnectedPartition> bond_lattice(const Graph& g) {
  std::vector<ConnectedPartition> out;
  for (auto& p : all_set_partitions(g.vertex_count())) {
    const auto& bs = p.blocks();
    if (std::all_of(bs.begin(), bs.end(), [&](const Block& b) { return g.induces_connected(b); }))
      out.emplace_back(g, std::move(p));
  }
  std::stable_sort(out.begin(), out.end(), [](const ConnectedPartition& a, const ConnectedPartition& b) {
    return a.block_count() > b.block_count();
  });
  return out;
}

std::vector<MobiusValue> mobius_values(const Graph& g) {
  std::vector<MobiusValue> values;
  for (auto& flat : bond_lattice(g)) {
    mpz_class mu = 0;
    if (values.empty()) {
      mu = 1;  // bottom: all singletons
    } else {
      for (const auto& below : values)
        if (below.flat.partition().refines(flat.partition())) mu -= below.mu;
    }
    values.push_back({std::move(flat), mu});
  }
  return values;
}

IntPolynomial mobius_char_poly(const Graph& g) {
  IntPolynomial chi;
  for (const auto& [flat, mu] : mobius_values(g)) chi += IntPolynomial::monomial(flat.dimension(), mu);
  return chi;
}

GreeneZaslavskyReport gz_coefficient_check(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  GreeneZaslavskyReport report{true, chromatic_deletion_contraction(g),
                               std::vector<std::uint64_t>(n + 1, 0)};
  for (const auto& gamma : enumerate_acyclic_orientations(g))
    ++report.orientations_by_components[source_components(gamma).block_count()];
  for (std::size_t k = 0; k <= n; ++k) {
    const mpz_class signed_count =
        (n - k) % 2 == 0 ? mpz_class(report.orientations_by_components[k])
                         : mpz_class(-mpz_class(report.orientations_by_components[k]));
    if (report.chromatic.coeff(k) != signed_count) report.holds = false;
  }
  if (report.chromatic.degree() > n) report.holds = false;
  return report;
}

bool region_count_check(const Graph& g) {
  const mpz_class at_minus_one = chromatic_deletion_contraction(g).eval(-1);
  return abs(at_minus_one) == mpz_class(enumerate_acyclic_orientations(g).size());
}

}  // namespace arrangeproj
