#include "flexpoly/geom.hpp"

#include <array>

namespace flexpoly {

Point3 lifted(const Point3& p, const FieldTower& tower) {
  return {p.x.lifted(tower), p.y.lifted(tower), p.z.lifted(tower)};
}

std::string to_string(PairTag tag) {
  switch (tag) {
    case PairTag::Disjoint: return "Disjoint";
    case PairTag::Intersecting: return "Intersecting";
    case PairTag::SharedSubsimplex: return "SharedSubsimplex";
    case PairTag::NeedsStudy: return "NeedsStudy";
  }
  return "?";
}

std::string to_string(Resolution r) {
  switch (r) {
    case Resolution::TouchOnly: return "TouchOnly";
    case Resolution::ProperIntersection: return "ProperIntersection";
    case Resolution::Disjoint: return "Disjoint";
  }
  return "?";
}

namespace {

template <class T>
bool coincide(const Vec3<T>& a, const Vec3<T>& b, const SignRule<T>& signs) {
  Vec3<T> d = a - b;
  return signs(d.x) == 0 && signs(d.y) == 0 && signs(d.z) == 0;
}

template <class T>
void require_nondegenerate(const Vec3<T>& z1, const Vec3<T>& z2, const Vec3<T>& y1, const Vec3<T>& y2,
                           const Vec3<T>& y3, const SignRule<T>& signs) {
  if (coincide(z1, z2, signs)) throw GeomError(GeomError::Kind::DegenerateSegment, "segment endpoints coincide");
  Vec3<T> n = cross(y2 - y1, y3 - y1);
  if (signs(n.x) == 0 && signs(n.y) == 0 && signs(n.z) == 0)
    throw GeomError(GeomError::Kind::DegenerateTriangle, "triangle has zero area");
}

}  // namespace

template <class T>
PairVerdict classify_segment_triangle(const Vec3<T>& z1, const Vec3<T>& z2, const Vec3<T>& y1, const Vec3<T>& y2,
                                      const Vec3<T>& y3, std::optional<SharedVertex> shared,
                                      const SignRule<T>& signs) {
  require_nondegenerate(z1, z2, y1, y2, y3, signs);

  if (shared) {
    const std::array<const Vec3<T>*, 2> z = {&z1, &z2};
    const std::array<const Vec3<T>*, 3> y = {&y1, &y2, &y3};
    const int a = shared->segment_end, b = shared->triangle_corner;
    if (a < 0 || a > 1 || b < 0 || b > 2) throw std::invalid_argument("shared vertex index out of range");
    if (!coincide(*z[a], *y[b], signs))
      throw GeomError(GeomError::Kind::InconsistentSharedVertex, "shared vertex has two different positions");
    // Cyclic relabeling keeps the shared corner first; the far endpoint decides.
    const Vec3<T>& far = *z[1 - a];
    const T g = orient6(*y[b], *y[(b + 1) % 3], *y[(b + 2) % 3], far);
    if (signs(g) != 0) return {PairTag::SharedSubsimplex, {}};
    return {PairTag::NeedsStudy, "edge through a shared vertex lies in the plane of the face"};
  }

  const int a = signs(orient6(y1, y2, y3, z1));
  const int b = signs(orient6(y1, y2, y3, z2));
  if (a * b > 0) return {PairTag::Disjoint, {}};
  if (a * b == 0) return {PairTag::NeedsStudy, "an edge endpoint lies in the plane of the face"};

  const int s1 = signs(orient6(z1, z2, y2, y3));
  const int s2 = signs(orient6(z1, z2, y3, y1));
  const int s3 = signs(orient6(z1, z2, y1, y2));
  if (s1 == 0 || s2 == 0 || s3 == 0)
    return {PairTag::NeedsStudy, "the edge line meets the boundary of the face"};
  if (s1 == s2 && s2 == s3) return {PairTag::Intersecting, {}};
  return {PairTag::Disjoint, {}};
}

template <class T>
Resolution resolve_needs_study(const Vec3<T>& z1, const Vec3<T>& z2, const Vec3<T>& y1, const Vec3<T>& y2,
                               const Vec3<T>& y3, std::optional<SharedVertex> shared, const SignRule<T>& signs) {
  require_nondegenerate(z1, z2, y1, y2, y3, signs);
  const std::array<Vec3<T>, 3> y = {y1, y2, y3};
  const Vec3<T> n = cross(y2 - y1, y3 - y1);
  const Vec3<T> dir = z2 - z1;

  // Inside-ness of a point w.r.t. triangle edge i: dot(n, e_i x (p - y_i)) >= 0.
  auto edge_value = [&](int i, const Vec3<T>& p) {
    return dot(n, cross(y[(i + 1) % 3] - y[i], p - y[i]));
  };

  // Parameters s in [0, 1] with z1 + s (z2 - z1) in the closed triangle form
  // an interval [lo, hi]; `empty` when there are none.
  T lo = T(0), hi = T(1);
  bool empty = false;

  const T a = orient6(y1, y2, y3, z1);
  const T b = orient6(y1, y2, y3, z2);
  const int sa = signs(a), sb = signs(b);
  if (sa == 0 && sb == 0) {
    for (int i = 0; i < 3 && !empty; ++i) {
      const T h0 = edge_value(i, z1);
      const T h1 = edge_value(i, z2);
      const int s0 = signs(h0), s1 = signs(h1);
      if (s0 >= 0 && s1 >= 0) continue;
      if (s0 < 0 && s1 < 0) {
        empty = true;
        continue;
      }
      const T cut = h0 / (h0 - h1);
      if (s1 < 0) {
        if (signs(cut - hi) < 0) hi = cut;
      } else if (signs(cut - lo) > 0) {
        lo = cut;
      }
    }
    if (!empty && signs(lo - hi) > 0) empty = true;
  } else if (sa * sb > 0) {
    empty = true;
  } else {
    const T s = a / (a - b);
    const Vec3<T> p = z1 + s * dir;
    for (int i = 0; i < 3; ++i) {
      if (signs(edge_value(i, p)) < 0) empty = true;
    }
    lo = s;
    hi = s;
  }

  if (empty) return Resolution::Disjoint;
  if (!shared) return Resolution::ProperIntersection;
  const T at = T(shared->segment_end == 0 ? 0 : 1);
  if (signs(lo - at) == 0 && signs(hi - at) == 0) return Resolution::TouchOnly;
  return Resolution::ProperIntersection;
}

template <class T>
Resolution resolve_needs_study(const Vec3<T>& z1, const Vec3<T>& z2, const Vec3<T>& y1, const Vec3<T>& y2,
                               const Vec3<T>& y3, SharedEdge shared, const SignRule<T>& signs) {
  require_nondegenerate(z1, z2, y1, y2, y3, signs);
  const std::array<const Vec3<T>*, 3> y = {&y1, &y2, &y3};
  auto coincide = [&](const Vec3<T>& p, int corner) {
    const Vec3<T> d = p - *y.at(corner);
    return signs(d.x) == 0 && signs(d.y) == 0 && signs(d.z) == 0;
  };
  if (shared.corner_of_z1 == shared.corner_of_z2 || !coincide(z1, shared.corner_of_z1) ||
      !coincide(z2, shared.corner_of_z2))
    throw GeomError(GeomError::Kind::InconsistentSharedVertex, "segment is not the declared triangle edge");
  return Resolution::TouchOnly;
}

template PairVerdict classify_segment_triangle<FieldElem>(const Point3&, const Point3&, const Point3&, const Point3&,
                                                          const Point3&, std::optional<SharedVertex>,
                                                          const SignRule<FieldElem>&);
template PairVerdict classify_segment_triangle<double>(const Point3d&, const Point3d&, const Point3d&,
                                                       const Point3d&, const Point3d&, std::optional<SharedVertex>,
                                                       const SignRule<double>&);
template Resolution resolve_needs_study<FieldElem>(const Point3&, const Point3&, const Point3&, const Point3&,
                                                   const Point3&, std::optional<SharedVertex>,
                                                   const SignRule<FieldElem>&);
template Resolution resolve_needs_study<double>(const Point3d&, const Point3d&, const Point3d&, const Point3d&,
                                                const Point3d&, std::optional<SharedVertex>, const SignRule<double>&);
template Resolution resolve_needs_study<FieldElem>(const Point3&, const Point3&, const Point3&, const Point3&,
                                                   const Point3&, SharedEdge, const SignRule<FieldElem>&);
template Resolution resolve_needs_study<double>(const Point3d&, const Point3d&, const Point3d&, const Point3d&,
                                                const Point3d&, SharedEdge, const SignRule<double>&);

}  // namespace flexpoly
