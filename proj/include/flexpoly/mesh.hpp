#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "flexpoly/geom.hpp"

namespace flexpoly {

using VertexId = int;
using EdgeKey = std::array<VertexId, 2>;
using FaceKey = std::array<VertexId, 3>;

EdgeKey edge_key(VertexId a, VertexId b);
FaceKey face_key(FaceKey f);
std::string to_string(const EdgeKey& e);  // "{1,2}"
std::string to_string(const FaceKey& f);  // "{1,2,3}"

/// Abstract 2-dimensional simplicial complex. Faces keep the vertex order
/// they were given in; all lookups use the sorted keys.
struct SurfaceComplex {
  std::vector<VertexId> vertex_ids;
  std::vector<EdgeKey> edges;
  std::vector<FaceKey> faces;
  bool with_boundary = false;
};

/// One message per violated invariant, naming the offending simplex. Empty
/// when the complex is well formed: no duplicates, every face edge listed,
/// each edge in exactly two faces (one or two with_boundary), connected, and
/// V - E + F = 2 when closed.
std::vector<std::string> validate_complex(const SurfaceComplex& c);

/// Faces reordered so that every interior edge is traversed in opposite
/// directions by its two faces. Orientation of the first face is kept.
/// Throws MeshError::NotClosed for complexes with boundary and for
/// non-orientable ones.
std::vector<FaceKey> oriented_faces(const SurfaceComplex& c);

class MeshError : public std::runtime_error {
 public:
  enum class Kind { InvalidComplex, MissingVertexCoordinates, DegenerateFace, UnknownEdge, NotClosed };

  MeshError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

enum class Mode { Exact, Float };

/// A complex with one point per vertex and every face nondegenerate.
template <class T>
class Realization {
 public:
  using Point = Vec3<T>;

  const SurfaceComplex& complex() const noexcept { return complex_; }
  const std::map<VertexId, Point>& coords() const noexcept { return coords_; }
  const Point& at(VertexId id) const { return coords_.at(id); }
  const SignRule<T>& signs() const noexcept { return signs_; }
  Mode mode() const noexcept { return std::is_same_v<T, double> ? Mode::Float : Mode::Exact; }

  /// The common tower of all coordinates (exact mode only).
  const FieldTower& tower() const noexcept
    requires std::is_same_v<T, FieldElem>
  {
    return tower_;
  }

 private:
  friend Realization<FieldElem> realize(SurfaceComplex, std::map<VertexId, Point3>);
  friend Realization<double> realize(SurfaceComplex, std::map<VertexId, Point3d>, double);

  SurfaceComplex complex_;
  std::map<VertexId, Point> coords_;
  SignRule<T> signs_{};
  FieldTower tower_;
};

using ExactRealization = Realization<FieldElem>;
using FloatRealization = Realization<double>;

inline constexpr double kDefaultEpsilon = 1e-9;

/// Exact realization; coordinates are lifted to their common tower.
/// Throws InvalidComplex, MissingVertexCoordinates or DegenerateFace.
ExactRealization realize(SurfaceComplex c, std::map<VertexId, Point3> coords);

/// Float realization; `epsilon` governs every sign decision on it.
FloatRealization realize(SurfaceComplex c, std::map<VertexId, Point3d> coords, double epsilon = kDefaultEpsilon);

struct LengthMismatch {
  EdgeKey edge;
  std::string expected;  // squared length
  std::string actual;    // squared length
};

/// Compares squared edge lengths with the squares of `lengths`: exactly in
/// exact mode, |dist - length| <= epsilon in float mode. Throws UnknownEdge
/// for an entry that is not an edge of the complex.
template <class T>
std::vector<LengthMismatch> check_edge_lengths(const Realization<T>& r, const std::map<EdgeKey, Rational>& lengths);

extern template std::vector<LengthMismatch> check_edge_lengths(const ExactRealization&,
                                                               const std::map<EdgeKey, Rational>&);
extern template std::vector<LengthMismatch> check_edge_lengths(const FloatRealization&,
                                                               const std::map<EdgeKey, Rational>&);

}  // namespace flexpoly
