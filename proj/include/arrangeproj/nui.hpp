#pragma once

#include <string>
#include <vector>

#include "arrangeproj/combinatorics.hpp"
#include "arrangeproj/geometry.hpp"
#include "arrangeproj/polynomial.hpp"

namespace arrangeproj {

/// c_j = number of neighbors of j below j, for a natural unit interval graph.
/// Valid when 0 <= c_j <= j-1 and j - c_j is nondecreasing.
class CVector {
public:
  /// Throws InvalidCVector when the invariants fail.
  explicit CVector(std::vector<int> c);
  /// Parses "0,1,1". Throws InvalidCVector on malformed text.
  static CVector parse(const std::string& text);

  int size() const noexcept { return static_cast<int>(c_.size()); }
  const std::vector<int>& values() const noexcept { return c_; }
  int operator[](std::size_t j) const { return c_[j]; }
  std::string to_string() const;

  friend bool operator==(const CVector&, const CVector&) = default;

private:
  std::vector<int> c_;
};

/// Every valid c-vector of length n, lexicographic order.
std::vector<CVector> all_c_vectors(int n);

/// Every edge {i, j} forces {i, k} and {k, j} for all i < k < j.
bool is_nui(const Graph& g);

/// Throws NotNUI.
CVector c_vector(const Graph& g);

/// Lower neighborhood of j is {j - c_j, ..., j - 1}.
Graph nui_from_c_vector(const CVector& c);

/// Every descent of sigma is a G-descent. Throws NotNUI.
bool is_g_local_min(const Graph& g, const Permutation& sigma);

/// Throws NotNUI.
std::vector<Permutation> enumerate_g_local_minima(const Graph& g);

/// Sum over G-local minima of q^{RLmin(sigma)}. Throws NotNUI.
IntPolynomial rlmin_generating_sum(const Graph& g);

/// prod_j (q - c_j), expanded.
IntPolynomial product_char_poly(const CVector& c);
/// prod_j (q + c_j), expanded.
IntPolynomial rising_product(const CVector& c);

struct NuiRegionCheck {
  AcyclicOrientation region;
  Permutation lex_min;
  std::size_t rl_minima;
  std::size_t pd;
  bool pd_matches;         // oracle pd == RLmin(lex-min extension)
  bool in_lex_min_region;  // oracle point in the closed braid region of lex_min
  bool face_connected;     // face partition = RL-minima cut of lex_min, blocks connected
};

struct NuiProjectionReport {
  bool holds;
  std::vector<NuiRegionCheck> regions;
};

/// Checks, region by region with the oracle projector, that pd equals the
/// RLmin of the lex-min linear extension, that the projection lies in that
/// permutation's closed braid region, and that the face is the RL-minima cut
/// of it with connected blocks. Throws NotNUI, or InvalidPoint when v fails
/// validate_point_graphical.
NuiProjectionReport nui_projection_check(const Graph& g, const RationalPoint& v);

}  // namespace arrangeproj
