#include "flexpoly/steffen.hpp"

#include <json.hpp>

#include <cmath>

#include "flexpoly/steffen_data.hpp"

namespace flexpoly::steffen {

namespace {

Combinatorics parse_combinatorics() {
  const auto j = nlohmann::json::parse(data::kComplexJson);
  Combinatorics out;
  for (const auto& v : j.at("vertices")) out.complex.vertex_ids.push_back(v.get<int>());
  for (const auto& e : j.at("edges")) {
    const auto ids = e.at("edge").get<std::array<int, 2>>();
    out.complex.edges.push_back(edge_key(ids[0], ids[1]));
    out.lengths[edge_key(ids[0], ids[1])] = Rational(e.at("length").get<long>());
  }
  for (const auto& f : j.at("faces")) out.complex.faces.push_back(f.get<FaceKey>());
  for (const auto& t : j.at("trilateration")) {
    PlacementRule rule;
    rule.vertex = t.at("vertex").get<int>();
    const auto& spheres = t.at("spheres");
    for (std::size_t i = 0; i < 3; ++i)
      rule.spheres[i] = {spheres.at(i).at(0).get<int>(), Rational(spheres.at(i).at(1).get<long>())};
    rule.plane = t.at("plane").get<std::array<int, 3>>();
    rule.reference = t.at("reference").get<int>();
    rule.side = t.at("side").get<std::string>() == "same" ? Side::Same : Side::Opposite;
    out.placements.push_back(rule);
  }
  return out;
}

void fail(const std::string& what) { throw SteffenError(SteffenError::Kind::InvariantViolation, what); }

}  // namespace

const Combinatorics& combinatorics() {
  static const Combinatorics data = parse_combinatorics();
  return data;
}

const FieldTower& base_tower() {
  static const FieldTower tower = adjoin(adjoin(FieldTower{}, 31), 166);
  return tower;
}

std::map<VertexId, Point3> base_vertices() {
  const FieldTower& t = base_tower();
  const FieldElem s31 = t.generator(1), s166 = t.generator(2);
  const FieldElem half(Rational(1, 2));
  std::map<VertexId, Point3> v;
  v[1] = {FieldElem(0), FieldElem(Rational(-17, 2)), half * s166};
  v[2] = {FieldElem(0), FieldElem(Rational(17, 2)), half * s166};
  v[3] = {FieldElem(Rational(-11, 2)), FieldElem(0), FieldElem(0)};
  v[4] = {FieldElem(Rational(11, 2)), FieldElem(0), FieldElem(0)};
  v[9] = {FieldElem(0), FieldElem(0), FieldElem(Rational(-3, 2)) * s31};
  for (auto& [id, p] : v) p = lifted(p, t);
  return v;
}

Trilateration trilaterate(const Point3& c1, const FieldElem& r1sq, const Point3& c2, const FieldElem& r2sq,
                          const Point3& c3, const FieldElem& r3sq, const FieldTower& ambient) {
  FieldTower tower = ambient;
  for (const Point3* c : {&c1, &c2, &c3})
    for (const FieldElem* e : {&c->x, &c->y, &c->z}) tower = common_tower(tower, e->tower());
  for (const FieldElem* e : {&r1sq, &r2sq, &r3sq}) tower = common_tower(tower, e->tower());

  const Point3 u = c2 - c1, v = c3 - c1;
  const Point3 n = cross(u, v);
  const FieldElem nn = dot(n, n);
  if (nn.is_zero()) throw SteffenError(SteffenError::Kind::CollinearCenters, "sphere centers are collinear");

  // x - c1 = alpha u + beta v + lambda n, with the in-plane part fixed by the
  // two differences of sphere equations.
  const FieldElem uu = dot(u, u), uv = dot(u, v), vv = dot(v, v);
  const FieldElem bu = (uu + r1sq - r2sq) * FieldElem(Rational(1, 2));
  const FieldElem bv = (vv + r1sq - r3sq) * FieldElem(Rational(1, 2));
  const FieldElem det = uu * vv - uv * uv;
  const FieldElem alpha = (bu * vv - bv * uv) / det;
  const FieldElem beta = (bv * uu - bu * uv) / det;
  const Point3 w = alpha * u + beta * v;
  const FieldElem disc = r1sq - dot(w, w);

  const int s = sign(disc);
  if (s < 0) throw SteffenError(SteffenError::Kind::NegativeDiscriminant, "spheres do not meet");

  Trilateration out;
  const Point3 foot = c1 + w;
  if (s == 0) {
    out.tangent = true;
    out.tower = tower;
    out.candidates = {lifted(foot, tower), lifted(foot, tower)};
    return out;
  }

  // lambda = factor * sqrt(radicand) with the rational square content removed.
  const auto [factor, radicand] = strip_rational_squares((disc / nn).lifted(tower));
  FieldElem lambda;
  if (auto root = positive_sqrt_in_field(radicand)) {
    lambda = FieldElem(factor) * *root;
  } else {
    tower = adjoin(tower, radicand);
    lambda = FieldElem(factor) * tower.generator(tower.depth());
  }
  out.tower = tower;
  out.candidates = {lifted(foot + lambda * n, tower), lifted(foot - lambda * n, tower)};
  return out;
}

std::array<Point3d, 2> trilaterate(const Point3d& c1, double r1sq, const Point3d& c2, double r2sq, const Point3d& c3,
                                   double r3sq) {
  const Point3d u = c2 - c1, v = c3 - c1;
  const Point3d n = cross(u, v);
  const double nn = dot(n, n);
  if (nn == 0.0) throw SteffenError(SteffenError::Kind::CollinearCenters, "sphere centers are collinear");
  const double uu = dot(u, u), uv = dot(u, v), vv = dot(v, v);
  const double bu = 0.5 * (uu + r1sq - r2sq);
  const double bv = 0.5 * (vv + r1sq - r3sq);
  const double det = uu * vv - uv * uv;
  const double alpha = (bu * vv - bv * uv) / det;
  const double beta = (bv * uu - bu * uv) / det;
  const Point3d w = alpha * u + beta * v;
  const double disc = r1sq - dot(w, w);
  if (disc < 0) throw SteffenError(SteffenError::Kind::NegativeDiscriminant, "spheres do not meet");
  const double lambda = std::sqrt(disc / nn);
  const Point3d foot = c1 + w;
  return {foot + lambda * n, foot - lambda * n};
}

template <class T>
int select_branch(const std::array<Vec3<T>, 2>& candidates, const std::array<Vec3<T>, 3>& plane,
                  const Vec3<T>& reference, Side side, const SignRule<T>& signs) {
  auto side_of = [&](const Vec3<T>& x) { return signs(mixed_product(plane[1], plane[2], x, plane[0])); };
  const int ref = side_of(reference);
  if (ref == 0) throw SteffenError(SteffenError::Kind::ReferenceOnPlane, "reference vertex lies on the fold plane");
  const int want = side == Side::Opposite ? -ref : ref;
  const bool first = side_of(candidates[0]) == want;
  const bool second = side_of(candidates[1]) == want;
  if (first == second)
    throw SteffenError(SteffenError::Kind::AmbiguousBranch, "fold-sign rule does not single out one candidate");
  return first ? 0 : 1;
}

std::vector<std::string> invariant_violations(const ExactRealization& r) {
  std::vector<std::string> out;
  const Combinatorics& data = combinatorics();
  for (const auto& m : check_edge_lengths(r, data.lengths))
    out.push_back("edge " + to_string(m.edge) + " has squared length " + m.actual + ", expected " + m.expected);

  auto expect_dist2 = [&](VertexId a, VertexId b, long want) {
    if (!(dist2(r.at(a), r.at(b)) == FieldElem(want)))
      out.push_back("|v" + std::to_string(a) + " v" + std::to_string(b) + "|^2 != " + std::to_string(want));
  };
  expect_dist2(3, 4, 121);
  expect_dist2(9, 3, 100);
  expect_dist2(9, 4, 100);

  const Point3& v9 = r.at(9);
  if (!v9.x.is_zero() || !v9.y.is_zero() || sign(v9.z) >= 0) out.push_back("v9 is not on the negative z-axis");

  const Point3 &v1 = r.at(1), &v2 = r.at(2);
  if (!(v1.x == v2.x && v1.y == -v2.y && v1.z == v2.z)) out.push_back("v1 and v2 are not mirror images under y -> -y");

  for (const auto& [from, to] : kHalfTurn) {
    const Point3 &p = r.at(from), &q = r.at(to);
    if (!(q.x == -p.x && q.y == -p.y && q.z == p.z))
      out.push_back("half-turn does not map v" + std::to_string(from) + " to v" + std::to_string(to));
  }
  return out;
}

SteffenModel build_steffen() {
  const Combinatorics& data = combinatorics();
  std::map<VertexId, Point3> coords = base_vertices();
  FieldTower tower = base_tower();
  SteffenModel model;

  for (const PlacementRule& rule : data.placements) {
    const auto& [s1, s2, s3] = rule.spheres;
    Trilateration t = trilaterate(coords.at(s1.center), FieldElem(s1.length * s1.length), coords.at(s2.center),
                                  FieldElem(s2.length * s2.length), coords.at(s3.center),
                                  FieldElem(s3.length * s3.length), tower);
    tower = t.tower;
    for (auto& [id, p] : coords) p = lifted(p, tower);
    const int idx = select_branch<FieldElem>(
        t.candidates, {coords.at(rule.plane[0]), coords.at(rule.plane[1]), coords.at(rule.plane[2])},
        coords.at(rule.reference), rule.side);
    coords[rule.vertex] = t.candidates[idx];
    model.branch[rule.vertex] = idx;
  }

  model.complex = data.complex;
  model.realization = realize(data.complex, coords);
  model.tower = model.realization.tower();
  auto violations = invariant_violations(model.realization);
  if (!violations.empty()) fail(violations.front());
  return model;
}

template <class T>
T volume(const Realization<T>& r, const Vec3<T>& apex) {
  T total = T(0);
  for (const FaceKey& f : oriented_faces(r.complex())) total += orient6(apex, r.at(f[0]), r.at(f[1]), r.at(f[2]));
  total = total / T(6);
  if constexpr (std::is_same_v<T, FieldElem>) {
    if (sign(total) < 0) total = -total;
  } else {
    total = std::abs(total);
  }
  return total;
}

template int select_branch(const std::array<Point3, 2>&, const std::array<Point3, 3>&, const Point3&, Side,
                           const SignRule<FieldElem>&);
template int select_branch(const std::array<Point3d, 2>&, const std::array<Point3d, 3>&, const Point3d&, Side,
                           const SignRule<double>&);
template FieldElem volume(const ExactRealization&, const Point3&);
template double volume(const FloatRealization&, const Point3d&);

}  // namespace flexpoly::steffen
