#pragma once

#include <optional>

#include "conifano/linalg.hpp"

namespace conifano {

// Facet inequality <x, normal> >= -offset, normal primitive.
struct Facet {
  IntVec normal;
  Int offset;
  bool operator==(const Facet&) const = default;
};

class Polytope {
 public:
  Polytope() = default;  // empty; fill via from_vertices

  // Convex hull of the given lattice points; redundant points are dropped.
  // Throws "degenerate" if the affine span is not full-dimensional.
  static Polytope from_vertices(std::vector<IntVec> points);

  int dim() const { return dim_; }
  const std::vector<IntVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  Int support(const Facet& f, const IntVec& x) const { return dot(f.normal, x) + f.offset; }
  bool contains(const IntVec& x) const;

  // vertex sets compared after canonical (lexicographic) sort
  bool operator==(const Polytope& rhs) const { return vertices_ == rhs.vertices_; }

 private:
  int dim_ = 0;
  std::vector<IntVec> vertices_;  // lexicographically sorted
  std::vector<Facet> facets_;     // sorted by (normal, offset)
};

struct Face {
  int dim = 0;
  std::vector<int> vertexIndices;      // sorted
  std::vector<int> tightFacetIndices;  // sorted
};

struct FaceLattice {
  std::vector<Face> faces;  // all proper nonempty faces, ascending dim, then by vertex set
  std::vector<int> ofDim(int k) const;
};

Polytope dual(const Polytope& P);
bool is_reflexive(const Polytope& P);
FaceLattice face_lattice(const Polytope& P);

// Vertex indices in dual(P) spanning the dual face of F (pairing = -1 with all of F).
std::vector<int> dual_face(const Polytope& P, const Polytope& dualP, const Face& F);

std::vector<IntVec> lattice_points(const Polytope& P);
// Lattice points lying on face F (tight on all of F's tight facets).
std::vector<IntVec> face_points(const Polytope& P, const Face& F, const std::vector<IntVec>& allPoints);
std::vector<IntVec> interior_points(const Polytope& P);

// d! * Euclidean volume, exact.
Int normalized_volume(const Polytope& P);

struct Divisibility {
  Int k;  // maximal k >= 1 with all vertices congruent mod k
  std::optional<Polytope> quotient;  // (P - v0)/k when k >= 2
};
Divisibility divisibility(const Polytope& P);
// (P - v0)/m for any m dividing divisibility(P).k.
Polytope quotient_by(const Polytope& P, const Int& m);

// Coordinates of affinely dependent lattice points in the lattice induced on
// their affine span (basis: Hermite form of the saturated span of differences
// from the lexicographically smallest point).
std::vector<IntVec> project_to_sublattice(const std::vector<IntVec>& pts);

}  // namespace conifano
