#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "arrangeproj/combinatorics.hpp"

namespace arrangeproj {

/// Dense integer polynomial in one indeterminate, coefficients ascending by
/// degree. Trailing zeros are trimmed, so the zero polynomial has one
/// coefficient 0 and degree 0.
class IntPolynomial {
public:
  IntPolynomial() : coeffs_{0} {}
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t degree, const mpz_class& c = 1);

  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  /// Coefficient of t^k; zero past the degree.
  mpz_class coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

  /// Horner evaluation.
  mpz_class eval(const mpz_class& x) const;
  /// p(-t).
  IntPolynomial reflected() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Descending powers of `var`, e.g. "q^3 - 3q^2 + 2q".
  std::string to_string(char var = 'q') const;
  /// "[0,2,-3,1]".
  std::string coeff_list() const;

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

mpz_class poly_eval(const IntPolynomial& p, const mpz_class& x);

/// Chromatic polynomial by deletion-contraction over simple graphs, memoized
/// on the adjacency encoding.
IntPolynomial chromatic_deletion_contraction(const Graph& g);

/// Number of proper colorings with q colors, by exhaustive enumeration of q^n
/// assignments.
mpz_class chromatic_by_counting(const Graph& g, unsigned q);

/// Flat of a graphical arrangement: a set partition whose blocks each induce a
/// connected subgraph.
class ConnectedPartition {
public:
  /// Throws std::invalid_argument when a block is disconnected in g.
  ConnectedPartition(const Graph& g, SetPartition partition);

  const SetPartition& partition() const noexcept { return partition_; }
  const std::vector<Block>& blocks() const noexcept { return partition_.blocks(); }
  std::size_t block_count() const noexcept { return partition_.block_count(); }
  /// Dimension of the flat.
  std::size_t dimension() const noexcept { return partition_.block_count(); }

  friend bool operator==(const ConnectedPartition&, const ConnectedPartition&) = default;

private:
  SetPartition partition_;
};

/// Flats of A_G, finest first (block count descending), so every flat appears
/// after all flats below it. The all-singletons partition is first.
std::vector<ConnectedPartition> bond_lattice(const Graph& g);

struct MobiusValue {
  ConnectedPartition flat;
  mpz_class mu;  // mu(0, flat)
};

/// mu(0, L) for every flat, in bond_lattice order.
std::vector<MobiusValue> mobius_values(const Graph& g);

/// Sum over flats of mu(0, L) t^{dim L}.
IntPolynomial mobius_char_poly(const Graph& g);

struct GreeneZaslavskyReport {
  bool holds;
  IntPolynomial chromatic;
  /// orientations_by_components[k] = #acyclic orientations with k source components.
  std::vector<std::uint64_t> orientations_by_components;
};

/// Compares |coefficient of q^k| (with sign (-1)^{n-k}) against the number of
/// acyclic orientations with k source components, for every k.
GreeneZaslavskyReport gz_coefficient_check(const Graph& g);

/// |chi_G(-1)| equals the number of acyclic orientations.
bool region_count_check(const Graph& g);

}  // namespace arrangeproj
