#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "flexpoly/numfield.hpp"

namespace flexpoly {

template <class T>
struct Vec3 {
  T x{}, y{}, z{};

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(const T& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
};

using Point3 = Vec3<FieldElem>;
using Point3d = Vec3<double>;

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Point3d to_double(const Point3& p) { return {p.x.to_double(), p.y.to_double(), p.z.to_double()}; }

/// Lifts all coordinates to one common tower.
Point3 lifted(const Point3& p, const FieldTower& tower);

/// Sign decisions. Exact for field elements; for doubles, |v| <= epsilon counts as zero.
template <class T>
struct SignRule;

template <>
struct SignRule<FieldElem> {
  int operator()(const FieldElem& v) const { return sign(v); }
};

template <>
struct SignRule<double> {
  double epsilon = 1e-9;
  int operator()(double v) const { return std::abs(v) <= epsilon ? 0 : (v > 0 ? 1 : -1); }
};

/// Six times the oriented volume of the tetrahedron (x0, x1, x2, x3): the
/// determinant with rows x1 - x0, x2 - x0, x3 - x0.
template <class T>
T orient6(const Vec3<T>& x0, const Vec3<T>& x1, const Vec3<T>& x2, const Vec3<T>& x3) {
  return dot(cross(x1 - x0, x2 - x0), x3 - x0);
}

/// ((a - origin) x (b - origin)) . (c - origin)
template <class T>
T mixed_product(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c, const Vec3<T>& origin) {
  return dot(cross(a - origin, b - origin), c - origin);
}

template <class T>
T dist2(const Vec3<T>& p, const Vec3<T>& q) {
  Vec3<T> d = p - q;
  return dot(d, d);
}

class GeomError : public std::runtime_error {
 public:
  enum class Kind { DegenerateSegment, DegenerateTriangle, InconsistentSharedVertex };

  GeomError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

enum class PairTag { Disjoint, Intersecting, SharedSubsimplex, NeedsStudy };

std::string to_string(PairTag tag);

struct PairVerdict {
  PairTag tag = PairTag::Disjoint;
  std::string detail;  // set for NeedsStudy
};

/// A vertex the segment and triangle share in the complex: segment endpoint
/// index (0 or 1) and triangle corner index (0, 1 or 2).
struct SharedVertex {
  int segment_end = 0;
  int triangle_corner = 0;
};

/// Segment z1z2 against closed triangle y1y2y3 using only signs of orient6.
///
/// Without sharing: endpoints strictly on one side of the plane are disjoint;
/// endpoints strictly on opposite sides are intersecting when the three
/// orient6(z1, z2, edge) values are nonzero with one sign, disjoint when they
/// are nonzero with mixed signs. Everything else is NeedsStudy.
///
/// With a shared vertex: the segment meets the triangle only in that vertex
/// unless its far endpoint lies in the triangle's plane, which is NeedsStudy.
template <class T>
PairVerdict classify_segment_triangle(const Vec3<T>& z1, const Vec3<T>& z2, const Vec3<T>& y1, const Vec3<T>& y2,
                                      const Vec3<T>& y3, std::optional<SharedVertex> shared = std::nullopt,
                                      const SignRule<T>& signs = {});

enum class Resolution { TouchOnly, ProperIntersection, Disjoint };

std::string to_string(Resolution r);

/// Complete decision for configurations the sign classifier leaves open:
/// computes the parameter interval of the segment inside the closed triangle
/// and compares it with the declared shared vertex.
template <class T>
Resolution resolve_needs_study(const Vec3<T>& z1, const Vec3<T>& z2, const Vec3<T>& y1, const Vec3<T>& y2,
                               const Vec3<T>& y3, std::optional<SharedVertex> shared = std::nullopt,
                               const SignRule<T>& signs = {});

/// Triangle corners that coincide with z1 and z2: the segment is a triangle edge.
struct SharedEdge {
  int corner_of_z1 = 0;
  int corner_of_z2 = 1;
};

/// A segment declared equal to a triangle edge meets the triangle exactly in
/// that edge: TouchOnly. Throws InconsistentSharedVertex if the coordinates
/// disagree with the declaration.
template <class T>
Resolution resolve_needs_study(const Vec3<T>& z1, const Vec3<T>& z2, const Vec3<T>& y1, const Vec3<T>& y2,
                               const Vec3<T>& y3, SharedEdge shared, const SignRule<T>& signs = {});

extern template PairVerdict classify_segment_triangle<FieldElem>(const Point3&, const Point3&, const Point3&,
                                                                 const Point3&, const Point3&,
                                                                 std::optional<SharedVertex>,
                                                                 const SignRule<FieldElem>&);
extern template PairVerdict classify_segment_triangle<double>(const Point3d&, const Point3d&, const Point3d&,
                                                              const Point3d&, const Point3d&,
                                                              std::optional<SharedVertex>, const SignRule<double>&);
extern template Resolution resolve_needs_study<FieldElem>(const Point3&, const Point3&, const Point3&,
                                                          const Point3&, const Point3&, std::optional<SharedVertex>,
                                                          const SignRule<FieldElem>&);
extern template Resolution resolve_needs_study<double>(const Point3d&, const Point3d&, const Point3d&,
                                                       const Point3d&, const Point3d&, std::optional<SharedVertex>,
                                                       const SignRule<double>&);
extern template Resolution resolve_needs_study<FieldElem>(const Point3&, const Point3&, const Point3&,
                                                          const Point3&, const Point3&, SharedEdge,
                                                          const SignRule<FieldElem>&);
extern template Resolution resolve_needs_study<double>(const Point3d&, const Point3d&, const Point3d&,
                                                       const Point3d&, const Point3d&, SharedEdge,
                                                       const SignRule<double>&);

}  // namespace flexpoly
