#pragma once

// Steffen's flexible polyhedron: 9 vertices, 21 edges, 14 faces, built
// exactly from its edge lengths.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "flexpoly/mesh.hpp"

namespace flexpoly::steffen {

class SteffenError : public std::runtime_error {
 public:
  enum class Kind { CollinearCenters, NegativeDiscriminant, ReferenceOnPlane, AmbiguousBranch, InvariantViolation };

  SteffenError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Which half-space, relative to the reference vertex, the new vertex lies in.
enum class Side { Opposite, Same };

struct SphereConstraint {
  VertexId center;
  Rational length;
};

/// How one of v5..v8 is placed: three spheres around known vertices and the
/// fold-sign rule picking one of the two mirror solutions.
struct PlacementRule {
  VertexId vertex;
  std::array<SphereConstraint, 3> spheres;
  std::array<VertexId, 3> plane;
  VertexId reference;
  Side side;
};

struct Combinatorics {
  SurfaceComplex complex;
  std::map<EdgeKey, Rational> lengths;
  std::vector<PlacementRule> placements;
};

/// Parsed once from the compiled-in data/steffen_complex.json.
const Combinatorics& combinatorics();

/// Vertex relabeling induced by the half-turn (x, y, z) -> (-x, -y, z).
inline const std::map<VertexId, VertexId> kHalfTurn = {{1, 2}, {2, 1}, {3, 4}, {4, 3}, {5, 8},
                                                       {6, 7}, {7, 6}, {8, 5}, {9, 9}};

/// Q(sqrt(31), sqrt(166)).
const FieldTower& base_tower();

/// v1..v4 and v9 over base_tower().
std::map<VertexId, Point3> base_vertices();

struct Trilateration {
  std::array<Point3, 2> candidates;  // + and - along the normal of the center plane
  bool tangent = false;              // double root; both candidates equal
  FieldTower tower;                  // tower of the candidates
};

/// Intersects three spheres |x - c_i|^2 = r_i^2 exactly. Works over the
/// common tower of the inputs and `ambient`, adjoining the square root of
/// the discriminant only when it is not already in that field.
Trilateration trilaterate(const Point3& c1, const FieldElem& r1sq, const Point3& c2, const FieldElem& r2sq,
                          const Point3& c3, const FieldElem& r3sq, const FieldTower& ambient = {});

/// Floating-point version; same candidate order.
std::array<Point3d, 2> trilaterate(const Point3d& c1, double r1sq, const Point3d& c2, double r2sq, const Point3d& c3,
                                   double r3sq);

/// Index (0 or 1) of the candidate on the requested side of `plane`
/// relative to `reference`, measured by mixed products against the plane.
template <class T>
int select_branch(const std::array<Vec3<T>, 2>& candidates, const std::array<Vec3<T>, 3>& plane,
                  const Vec3<T>& reference, Side side = Side::Opposite, const SignRule<T>& signs = {});

struct SteffenModel {
  SurfaceComplex complex;
  ExactRealization realization;
  FieldTower tower;
  std::map<VertexId, int> branch;  // chosen trilateration candidate for v5..v8
};

/// Builds S_0 and checks every model invariant; throws InvariantViolation
/// naming the first failing check.
SteffenModel build_steffen();

/// Invariant failures of a Steffen realization; empty when all hold.
std::vector<std::string> invariant_violations(const ExactRealization& r);

/// Enclosed volume: sum of orient6(apex, a, b, c) / 6 over consistently
/// oriented faces, sign fixed to be positive. Throws NotClosed.
template <class T>
T volume(const Realization<T>& r, const Vec3<T>& apex = {});

extern template int select_branch(const std::array<Point3, 2>&, const std::array<Point3, 3>&, const Point3&, Side,
                                  const SignRule<FieldElem>&);
extern template int select_branch(const std::array<Point3d, 2>&, const std::array<Point3d, 3>&, const Point3d&,
                                  Side, const SignRule<double>&);
extern template FieldElem volume(const ExactRealization&, const Point3&);
extern template double volume(const FloatRealization&, const Point3d&);

}  // namespace flexpoly::steffen
