#include <doctest.h>

#include "arrangeproj/polynomial.hpp"
#include "oracles.hpp"

using namespace arrangeproj;

namespace {

const Graph kP3{3, {{1, 2}, {2, 3}}};
const Graph kK3 = Graph::complete(3);

std::vector<Graph> graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : all_graphs(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic and formatting") {
  const IntPolynomial k3{0, 2, -3, 1};
  CHECK(k3.degree() == 3);
  CHECK(k3.to_string() == "q^3 - 3q^2 + 2q");
  CHECK(k3.coeff_list() == "[0,2,-3,1]");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{}.coeff_list() == "[0]");
  CHECK(IntPolynomial{0, 0, 0, 0}.is_zero());
  CHECK(IntPolynomial::monomial(3).to_string() == "q^3");
  CHECK(IntPolynomial{-1, 0, -1}.to_string() == "-q^2 - 1");
  CHECK(IntPolynomial{5}.to_string() == "5");
  CHECK(IntPolynomial{0, 1} * IntPolynomial{-1, 1} * IntPolynomial{-2, 1} == k3);
  CHECK(k3 - k3 == IntPolynomial{});
  CHECK(k3.reflected() == IntPolynomial{0, -2, -3, -1});

  CHECK(poly_eval(IntPolynomial{}, 17) == 0);
  CHECK(poly_eval(k3, 3) == 6);
  CHECK(poly_eval(k3, -1) == -6);
}

TEST_CASE("chromatic polynomial examples") {
  CHECK(chromatic_deletion_contraction(Graph::edgeless(3)) == IntPolynomial::monomial(3));
  CHECK(chromatic_deletion_contraction(kK3) == IntPolynomial{0, 2, -3, 1});
  CHECK(chromatic_deletion_contraction(kP3) == IntPolynomial{0, 1, -2, 1});
  // 4-cycle: (q-1)^4 + (q-1)
  CHECK(chromatic_deletion_contraction(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})) ==
        IntPolynomial{0, -3, 6, -4, 1});
}

TEST_CASE("chromatic_by_counting") {
  CHECK(chromatic_by_counting(kK3, 2) == 0);
  CHECK(chromatic_by_counting(kK3, 3) == 6);
  for (unsigned q = 0; q <= 5; ++q) CHECK(chromatic_by_counting(Graph::edgeless(3), q) == q * q * q);
}

TEST_CASE("deletion-contraction matches the interpolated color counts, n <= 5") {
  for (const auto& g : graphs_up_to(5)) {
    const auto chi = chromatic_deletion_contraction(g);
    REQUIRE(chi == oracle::interpolated_chromatic(g));
    const int n = g.vertex_count();
    REQUIRE(chi.degree() == static_cast<std::size_t>(n));
    REQUIRE(chi.coeff(static_cast<std::size_t>(n)) == 1);
    for (unsigned q = 0; q <= static_cast<unsigned>(n) + 1; ++q) REQUIRE(chi.eval(q) == chromatic_by_counting(g, q));
    // Signs alternate: coefficient of q^k is zero or has sign (-1)^{n-k}.
    for (int k = 0; k <= n; ++k) {
      const int s = sgn(chi.coeff(static_cast<std::size_t>(k)));
      REQUIRE((s == 0 || s == ((n - k) % 2 == 0 ? 1 : -1)));
    }
  }
}

TEST_CASE("bond lattice") {
  CHECK(bond_lattice(Graph::edgeless(4)).size() == 1);
  CHECK(bond_lattice(kK3).size() == 5);
  const auto p3 = bond_lattice(kP3);
  REQUIRE(p3.size() == 4);
  CHECK(p3.front().partition() == SetPartition::singletons(3));
  for (const auto& f : p3) CHECK_FALSE(f.partition() == SetPartition(3, {{1, 3}, {2}}));
  CHECK_THROWS_AS(ConnectedPartition(kP3, SetPartition(3, {{1, 3}, {2}})), std::invalid_argument);

  // Refinement-compatible order: nothing strictly below a flat comes after it.
  for (const auto& g : graphs_up_to(4)) {
    const auto lattice = bond_lattice(g);
    for (std::size_t i = 0; i < lattice.size(); ++i)
      for (std::size_t j = i + 1; j < lattice.size(); ++j)
        REQUIRE_FALSE((lattice[j].partition().refines(lattice[i].partition()) &&
                       !(lattice[j].partition() == lattice[i].partition())));
  }
}

TEST_CASE("Mobius characteristic polynomial") {
  CHECK(mobius_char_poly(Graph::edgeless(2)) == IntPolynomial::monomial(2));
  CHECK(mobius_char_poly(Graph(2, {{1, 2}})) == IntPolynomial{0, -1, 1});
  CHECK(mobius_char_poly(kK3) == IntPolynomial{0, 2, -3, 1});

  const auto mu = mobius_values(kK3);
  std::vector<long> values;
  for (const auto& m : mu) values.push_back(m.mu.get_si());
  CHECK(values == std::vector<long>{1, -1, -1, -1, 2});
}

TEST_CASE("Mobius recursion sums to zero above the bottom and matches chromatic, n <= 5") {
  for (const auto& g : graphs_up_to(5)) {
    const auto mu = mobius_values(g);
    for (std::size_t l = 1; l < mu.size(); ++l) {
      mpz_class sum = 0;
      for (const auto& m : mu)
        if (m.flat.partition().refines(mu[l].flat.partition())) sum += m.mu;
      REQUIRE(sum == 0);
    }
    REQUIRE(mobius_char_poly(g) == chromatic_deletion_contraction(g));
  }
}

TEST_CASE("Greene-Zaslavsky coefficients and region counts") {
  const auto k3 = gz_coefficient_check(kK3);
  CHECK(k3.holds);
  CHECK(k3.orientations_by_components == std::vector<std::uint64_t>{0, 2, 3, 1});
  const auto p3 = gz_coefficient_check(kP3);
  CHECK(p3.holds);
  CHECK(p3.orientations_by_components == std::vector<std::uint64_t>{0, 1, 2, 1});
  const auto empty = gz_coefficient_check(Graph::edgeless(4));
  CHECK(empty.holds);
  CHECK(empty.orientations_by_components == std::vector<std::uint64_t>{0, 0, 0, 0, 1});

  CHECK(region_count_check(kK3));
  CHECK(region_count_check(kP3));
  CHECK(region_count_check(Graph::edgeless(3)));
  for (const auto& g : graphs_up_to(5)) {
    REQUIRE(gz_coefficient_check(g).holds);
    REQUIRE(region_count_check(g));
  }
}
