#include "flexpoly/mesh.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <queue>
#include <set>

namespace flexpoly {

EdgeKey edge_key(VertexId a, VertexId b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

FaceKey face_key(FaceKey f) {
  std::sort(f.begin(), f.end());
  return f;
}

std::string to_string(const EdgeKey& e) { return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "}"; }

std::string to_string(const FaceKey& f) {
  return "{" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]) + "}";
}

namespace {

std::array<EdgeKey, 3> face_edges(const FaceKey& f) {
  return {edge_key(f[0], f[1]), edge_key(f[1], f[2]), edge_key(f[2], f[0])};
}

std::map<EdgeKey, std::vector<std::size_t>> edge_faces(const SurfaceComplex& c) {
  std::map<EdgeKey, std::vector<std::size_t>> incidence;
  for (std::size_t i = 0; i < c.faces.size(); ++i)
    for (const EdgeKey& e : face_edges(c.faces[i])) incidence[e].push_back(i);
  return incidence;
}

}  // namespace

std::vector<std::string> validate_complex(const SurfaceComplex& c) {
  std::vector<std::string> out;
  std::set<VertexId> vertices;
  for (VertexId v : c.vertex_ids)
    if (!vertices.insert(v).second) out.push_back("duplicate vertex " + std::to_string(v));
  if (vertices.empty()) out.push_back("complex has no vertices");

  std::set<EdgeKey> edges;
  for (const EdgeKey& raw : c.edges) {
    EdgeKey e = edge_key(raw[0], raw[1]);
    if (e[0] == e[1]) out.push_back("edge " + to_string(e) + " has coincident endpoints");
    for (VertexId v : e)
      if (!vertices.count(v)) out.push_back("edge " + to_string(e) + " uses unknown vertex " + std::to_string(v));
    if (!edges.insert(e).second) out.push_back("duplicate edge " + to_string(e));
  }

  std::set<FaceKey> faces;
  for (const FaceKey& raw : c.faces) {
    FaceKey f = face_key(raw);
    if (f[0] == f[1] || f[1] == f[2]) out.push_back("face " + to_string(f) + " has repeated vertices");
    for (VertexId v : f)
      if (!vertices.count(v)) out.push_back("face " + to_string(f) + " uses unknown vertex " + std::to_string(v));
    if (!faces.insert(f).second) out.push_back("duplicate face " + to_string(f));
    for (const EdgeKey& e : face_edges(f))
      if (!edges.count(e)) out.push_back("face " + to_string(f) + " has unlisted edge " + to_string(e));
  }

  auto incidence = edge_faces(c);
  for (const EdgeKey& e : edges) {
    const std::size_t n = incidence.count(e) ? incidence.at(e).size() : 0;
    const bool ok = c.with_boundary ? (n == 1 || n == 2) : n == 2;
    if (!ok) out.push_back("edge " + to_string(e) + " in " + std::to_string(n) + (n == 1 ? " face" : " faces"));
  }

  // Connectedness over the 1-skeleton.
  if (!vertices.empty()) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const EdgeKey& e : edges) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
    std::set<VertexId> seen{*vertices.begin()};
    std::queue<VertexId> todo;
    todo.push(*vertices.begin());
    while (!todo.empty()) {
      VertexId v = todo.front();
      todo.pop();
      for (VertexId w : adj[v])
        if (vertices.count(w) && seen.insert(w).second) todo.push(w);
    }
    for (VertexId v : vertices)
      if (!seen.count(v)) out.push_back("vertex " + std::to_string(v) + " is not connected to vertex " +
                                        std::to_string(*vertices.begin()));
  }

  if (!c.with_boundary) {
    const long chi = static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) +
                     static_cast<long>(faces.size());
    if (chi != 2) out.push_back("closed complex has Euler characteristic " + std::to_string(chi) + ", expected 2");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FaceKey> oriented_faces(const SurfaceComplex& c) {
  auto incidence = edge_faces(c);
  for (const auto& [e, fs] : incidence)
    if (fs.size() != 2)
      throw MeshError(MeshError::Kind::NotClosed, "edge " + to_string(e) + " is not shared by exactly two faces");

  std::vector<FaceKey> out = c.faces;
  std::vector<bool> done(c.faces.size(), false);
  // Directed edge (a, b) belongs to a face listing a then b cyclically.
  auto has_directed = [](const FaceKey& f, VertexId a, VertexId b) {
    for (int i = 0; i < 3; ++i)
      if (f[i] == a && f[(i + 1) % 3] == b) return true;
    return false;
  };
  for (std::size_t seed = 0; seed < out.size(); ++seed) {
    if (done[seed]) continue;
    done[seed] = true;
    std::queue<std::size_t> todo;
    todo.push(seed);
    while (!todo.empty()) {
      std::size_t i = todo.front();
      todo.pop();
      const FaceKey f = out[i];
      for (int k = 0; k < 3; ++k) {
        VertexId a = f[k], b = f[(k + 1) % 3];
        for (std::size_t j : incidence.at(edge_key(a, b))) {
          if (j == i) continue;
          if (!done[j]) {
            if (has_directed(out[j], a, b)) std::swap(out[j][0], out[j][1]);
            done[j] = true;
            todo.push(j);
          } else if (has_directed(out[j], a, b)) {
            throw MeshError(MeshError::Kind::NotClosed, "complex is not orientable");
          }
        }
      }
    }
  }
  return out;
}

namespace {

template <class T>
void check_faces(const SurfaceComplex& c, const std::map<VertexId, Vec3<T>>& coords, const SignRule<T>& signs) {
  for (VertexId v : c.vertex_ids)
    if (!coords.count(v))
      throw MeshError(MeshError::Kind::MissingVertexCoordinates, "vertex " + std::to_string(v) + " has no coordinates");
  for (const FaceKey& f : c.faces) {
    Vec3<T> n = cross(coords.at(f[1]) - coords.at(f[0]), coords.at(f[2]) - coords.at(f[0]));
    if (signs(n.x) == 0 && signs(n.y) == 0 && signs(n.z) == 0)
      throw MeshError(MeshError::Kind::DegenerateFace, "face " + to_string(face_key(f)) + " is degenerate");
  }
}

void require_valid(const SurfaceComplex& c) {
  auto violations = validate_complex(c);
  if (violations.empty()) return;
  std::string msg = "invalid complex:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw MeshError(MeshError::Kind::InvalidComplex, msg);
}

}  // namespace

ExactRealization realize(SurfaceComplex c, std::map<VertexId, Point3> coords) {
  require_valid(c);
  FieldTower tower;
  for (const auto& [id, p] : coords)
    for (const FieldElem* e : {&p.x, &p.y, &p.z}) tower = common_tower(tower, e->tower());
  for (auto& [id, p] : coords) p = lifted(p, tower);
  ExactRealization r;
  check_faces(c, coords, r.signs_);
  r.complex_ = std::move(c);
  r.coords_ = std::move(coords);
  r.tower_ = std::move(tower);
  return r;
}

FloatRealization realize(SurfaceComplex c, std::map<VertexId, Point3d> coords, double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("float mode needs epsilon > 0");
  require_valid(c);
  FloatRealization r;
  r.signs_.epsilon = epsilon;
  check_faces(c, coords, r.signs_);
  r.complex_ = std::move(c);
  r.coords_ = std::move(coords);
  return r;
}

namespace {

std::string show(const FieldElem& v) { return v.to_string(); }

std::string show(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

template <class T>
std::vector<LengthMismatch> check_edge_lengths(const Realization<T>& r, const std::map<EdgeKey, Rational>& lengths) {
  std::set<EdgeKey> known;
  for (const EdgeKey& e : r.complex().edges) known.insert(edge_key(e[0], e[1]));
  std::vector<LengthMismatch> out;
  for (const auto& [raw, length] : lengths) {
    EdgeKey e = edge_key(raw[0], raw[1]);
    if (!known.count(e)) throw MeshError(MeshError::Kind::UnknownEdge, "no edge " + to_string(e) + " in the complex");
    const T d2 = dist2(r.at(e[0]), r.at(e[1]));
    const Rational expected = length * length;
    bool match;
    if constexpr (std::is_same_v<T, FieldElem>) {
      match = d2 == FieldElem(expected);
    } else {
      match = std::abs(std::sqrt(d2) - length.get_d()) <= r.signs().epsilon;
    }
    if (!match) out.push_back({e, rational_string(expected), show(d2)});
  }
  return out;
}

template std::vector<LengthMismatch> check_edge_lengths(const ExactRealization&, const std::map<EdgeKey, Rational>&);
template std::vector<LengthMismatch> check_edge_lengths(const FloatRealization&, const std::map<EdgeKey, Rational>&);

}  // namespace flexpoly
