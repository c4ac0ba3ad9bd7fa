#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrangeproj/combinatorics.hpp"
#include "arrangeproj/polynomial.hpp"

namespace arrangeproj {

using Rational = mpq_class;

/// Point of R^n with exact rational coordinates; coordinate i is at index i-1.
class RationalPoint {
public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords);
  static RationalPoint from_integers(const std::vector<long>& coords);

  int dimension() const noexcept { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  /// 1-based coordinate access.
  const Rational& at(Vertex i) const { return coords_[static_cast<std::size_t>(i - 1)]; }
  /// "(1596,1596,1)"; non-integers as p/q in lowest terms.
  std::string to_string() const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

private:
  std::vector<Rational> coords_;
};

Rational squared_distance(const RationalPoint& a, const RationalPoint& b);

// Generic points, scaled to integers.

/// v_i = (n+1)^{n-i}: strictly decreasing with v_i - v_{i+1} > n (v_{i+1} - v_n).
RationalPoint braid_generic_point(int n);
/// v_i = (6n^2+2)^{n-i}: v_i > (6n^2+1) v_{i+1}, v_n > 0.
RationalPoint graphical_generic_point(int n);
/// v_i = 1 - (n+2)^{i-1}: strictly decreasing with v_i - v_{i+1} > n (v_1 - v_i).
RationalPoint lrmax_generic_point(int n);

bool validate_point_braid(const RationalPoint& v, int n);
bool validate_point_graphical(const RationalPoint& v, int n);
bool validate_point_lrmax(const RationalPoint& v, int n);

/// Orthogonal projection onto the flat {x : x constant on each block}:
/// coordinate i becomes the average of v over i's block.
RationalPoint project_onto_flat(const RationalPoint& v, const SetPartition& pi);

/// A face of the graphical arrangement A_G: the flat it spans plus the strict
/// order between blocks joined by at least one edge of G.
class GraphicalFace {
public:
  /// `dominance` lists (higher, lower) pairs of block indices into
  /// flat.blocks(). Throws std::invalid_argument unless exactly the
  /// quotient-adjacent pairs are covered, once each, and the relation is acyclic.
  GraphicalFace(const Graph& g, ConnectedPartition flat, std::vector<std::pair<std::size_t, std::size_t>> dominance);

  const ConnectedPartition& flat() const noexcept { return flat_; }
  const SetPartition& partition() const noexcept { return flat_.partition(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& dominance() const noexcept { return dominance_; }
  std::size_t dimension() const noexcept { return flat_.dimension(); }
  /// True iff block a is required to sit strictly above block b.
  bool dominates(std::size_t a, std::size_t b) const;

  /// The representative ordered partition whose block minima increase, if the
  /// dominance admits one.
  std::optional<OrderedSetPartition> increasing_minima_representative() const;
  /// "{1,2}>{3}" style rendering; edges between blocks only.
  std::string to_string() const;

  friend bool operator==(const GraphicalFace&, const GraphicalFace&) = default;

private:
  ConnectedPartition flat_;
  std::vector<std::pair<std::size_t, std::size_t>> dominance_;
};

/// Face of A_G labeled by an ordered partition (earlier blocks higher).
/// Blocks must be connected in g.
GraphicalFace face_from_ordered_partition(const Graph& g, const OrderedSetPartition& pi);

/// The face spanning `flat` inside the closure of gamma's region, if the
/// flat carries one: every cross-block edge must induce a consistent,
/// acyclic block order.
std::optional<GraphicalFace> face_in_region(const AcyclicOrientation& gamma, const ConnectedPartition& flat);

/// Every face of A_G in the closure of gamma's region, in bond_lattice order.
std::vector<GraphicalFace> faces_of_region(const Graph& g, const AcyclicOrientation& gamma);
std::vector<GraphicalFace> faces_of_region(const AcyclicOrientation& gamma,
                                           const std::vector<ConnectedPartition>& lattice);

/// Whether the flat projection of v lies in the relative interior of the face.
bool is_good_face(const Graph& g, const RationalPoint& v, const GraphicalFace& face);

/// Block minima strictly increase.
bool good_face_min_criterion(const OrderedSetPartition& pi);

struct ProjectionResult {
  RationalPoint point;
  GraphicalFace face;
  std::size_t pd;

  friend bool operator==(const ProjectionResult&, const ProjectionResult&) = default;
};

/// Projection onto the closure of gamma's region via source components.
/// Throws InvalidPoint unless validate_point_graphical(v) holds.
ProjectionResult project_onto_region_closed_form(const Graph& g, const AcyclicOrientation& gamma,
                                                 const RationalPoint& v);

/// Projection by exhaustive minimization of the squared distance over the good
/// faces of the region. Works for any v; throws NonGenericPoint on a tie at
/// the minimum.
ProjectionResult project_onto_region_oracle(const Graph& g, const AcyclicOrientation& gamma,
                                            const RationalPoint& v);
ProjectionResult project_onto_region_oracle(const AcyclicOrientation& gamma, const RationalPoint& v,
                                            const std::vector<ConnectedPartition>& lattice);

/// A good face together with the flat projection and its squared distance to v.
struct GoodFace {
  GraphicalFace face;
  RationalPoint point;
  Rational squared_distance;
};

std::vector<GoodFace> good_faces_of_region(const AcyclicOrientation& gamma, const RationalPoint& v,
                                           const std::vector<ConnectedPartition>& lattice);

/// Index of the unique minimizer of squared_distance; throws NonGenericPoint
/// on a tie at the minimum, std::invalid_argument when empty.
std::size_t nearest_candidate(const std::vector<GoodFace>& candidates);

/// Exact pool-adjacent-violators projection onto {x : x_{s1} >= ... >= x_{sn}}.
RationalPoint pava_chain_projection(const RationalPoint& v, const Permutation& sigma);

/// Sum over regions of (-1)^{n-pd} t^{pd}, pd from the closed form.
IntPolynomial char_poly_via_projection(const Graph& g, const RationalPoint& v);

/// Every good face's increasing-minima representative D satisfies
/// B_1 u ... u B_j within D_1 u ... u D_j for all j, B the source components.
bool prefix_containment_check(const Graph& g, const AcyclicOrientation& gamma, const RationalPoint& v);
bool prefix_containment_check(const AcyclicOrientation& gamma, const RationalPoint& v,
                              const std::vector<ConnectedPartition>& lattice);

}  // namespace arrangeproj
