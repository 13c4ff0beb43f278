#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "phiehr/lattice.hpp"
#include "phiehr/numeric.hpp"

namespace phiehr {

using Point = RatVec;

std::size_t affine_rank(const std::vector<Point>& pts);

/// Convex polytope given by its vertices (rational points). Construction
/// dedupes and drops non-extreme points, so the stored list is irredundant;
/// the original relative order of the surviving points is kept.
class Polytope {
 public:
  Polytope(std::size_t dim_ambient, std::vector<Point> points);

  std::size_t dim_ambient() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t dim_intrinsic() const;
  bool is_full_dimensional() const { return dim_intrinsic() == dim_; }
  bool is_lattice() const;

  /// Vertices scaled by n (the dilate nP).
  std::vector<Point> dilated_vertices(const Integer& n) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> vertices_;
};

/// Simplex with a subset of facets removed; facet i is the one opposite
/// vertex i, and removed[i] corresponds to the strict constraint
/// lambda_i > 0 on barycentric coordinates.
struct HalfOpenSimplex {
  std::vector<Point> vertices;  // affinely independent
  std::vector<bool> removed;    // one flag per vertex/facet

  std::size_t dim() const { return vertices.size() - 1; }
  bool is_lattice() const;
  HalfOpenSimplex complement() const;
  /// Exact barycentric membership test honoring the removed-facet flags.
  bool contains(const Point& x) const;
  /// Membership in the dilate n * simplex.
  bool contains_dilated(const Point& x, const Integer& n) const;
  /// Barycentric coordinates of x, or nullopt when x is outside the affine
  /// hull. Ignores the flags.
  std::optional<RatVec> barycentric(const Point& x) const;
};

void validate_half_open_simplex(const HalfOpenSimplex& s, std::size_t dim_ambient);

/// Tangent cone of P at vertex apex, generated by the primitive directions
/// of the edges of P at that vertex.
struct VertexCone {
  Point apex;
  std::vector<IntVec> generators;
};

/// Simplicial piece of a cone: linearly independent generators plus
/// half-open flags (open_flags[i] true means lambda_i > 0).
struct HalfOpenCone {
  std::vector<IntVec> generators;
  std::vector<bool> open_flags;
};

/// Triangulation of the point configuration (all points used; interior
/// points split the simplex that contains them). Returns index lists into
/// `pts`. Deterministic in the input order.
std::vector<std::vector<std::size_t>> triangulate_point_config(const std::vector<Point>& pts);

/// Placing triangulation of P on the given vertex order, with removed-facet
/// flags assigned by visibility from a generic interior reference point so
/// that the half-open pieces partition P.
std::vector<HalfOpenSimplex> half_open_decomposition(const Polytope& p);
std::vector<HalfOpenSimplex> half_open_decomposition(const Polytope& p,
                                                     const std::vector<std::size_t>& vertex_order);

/// Checks that the half-open pieces exactly partition the lattice points of
/// n*P for each dilate n = 0..max_dilate (lower-dimensional manual pieces
/// are legal).
bool validate_decomposition(const Polytope& p, const std::vector<HalfOpenSimplex>& pieces,
                            const Integer& max_dilate);

std::vector<VertexCone> vertex_cones(const Polytope& p);

/// Half-open simplicial cones partitioning K (the apex is not part of the
/// split; callers keep it alongside).
std::vector<HalfOpenCone> cone_simplicial_split(const VertexCone& k);

/// Exact membership of x - apex in the half-open cone.
bool cone_contains(const HalfOpenCone& c, const Point& apex, const Point& x);

}  // namespace phiehr
