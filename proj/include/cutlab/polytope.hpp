#pragma once

#include "cutlab/caps.hpp"
#include "cutlab/instance.hpp"
#include "cutlab/simplex.hpp"

#include <optional>
#include <vector>

namespace cutlab {

// All vertices of a bounded H-polytope, exactly. Incremental double
// description from a bounding box (per-coordinate LPs), combinatorial
// adjacency via rank of common tight rows. Empty result = empty polytope.
// Errors: unbounded polytope, dim > caps.vertex_enum_dim.
VPolytope enumerate_vertices(const HPolytope& poly, const Caps& caps = {});

// Dedupes and removes points that are convex combinations of the others;
// the result's points are exactly the vertices of the hull.
VPolytope canonicalize(VPolytope v);

// x in conv(points)? Exact membership LP.
bool hull_contains(const VPolytope& v, const QVec& x);

// H-representation of conv(points) + cone(rays). Lower-dimensional hulls get
// their affine hull as equality rows; facet rows are <=.
HPolytope convex_hull_facets(const std::vector<QVec>& points,
                             const std::vector<QVec>& rays, int dim);

// Coordinate projection onto coords (in the given order), canonicalized.
VPolytope project_polytope(const VPolytope& v, const std::vector<int>& coords);

// Integer hull of a bounded instance: vertices of
// conv({x feasible, x_j integral for integer j}). Pure case by box
// enumeration; mixed case enumerates integer assignments and the continuous
// slice vertices for each. Errors: unbounded vars, box cells > cap.
VPolytope integer_hull(const MilpInstance& inst, const Caps& caps = {});

// All feasible integer points of a bounded pure-integer instance.
std::vector<QVec> integer_points(const MilpInstance& inst, const Caps& caps = {});

// Exact squared Euclidean distance from x to conv(v.points), with the nearest
// point and an exactly checked optimality certificate
// ((x - y) . (p - y) <= 0 for every vertex p).
struct DistanceResult {
  Rational sq_dist;
  QVec nearest;
};
DistanceResult sq_distance(const QVec& x, const VPolytope& v, const Caps& caps = {});

}  // namespace cutlab
