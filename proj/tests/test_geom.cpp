#include <doctest.h>

#include <functional>

#include "support/generators.hpp"

using namespace flexpoly;
using oracle::Q3;

namespace {

Point3 P(Rational x, Rational y, Rational z) { return {FieldElem(x), FieldElem(y), FieldElem(z)}; }

// Triangle of the classifier examples.
const Point3 Y1 = P(1, 0, 0), Y2 = P(0, 1, 0), Y3 = P(-1, -1, 0);

PairTag classify(const Point3& z1, const Point3& z2) { return classify_segment_triangle(z1, z2, Y1, Y2, Y3).tag; }

GeomError::Kind geom_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const GeomError& e) {
    return e.kind();
  }
  FAIL("expected GeomError");
  return GeomError::Kind::DegenerateSegment;
}

}  // namespace

TEST_CASE("orient6 examples") {
  CHECK(orient6(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)) == FieldElem(1));
  const Point3 p = P(3, -1, 2), q = P(Rational(1, 3), 5, 7), r = P(0, 2, -4);
  CHECK(orient6(p, p, q, r).is_zero());

  // Base vertices written out from their closed forms.
  const FieldTower t = adjoin(FieldTower{}, 166);
  const FieldElem h = FieldElem(Rational(1, 2)) * t.generator(1);
  const Point3 v1{FieldElem(0), FieldElem(Rational(-17, 2)), h}, v2{FieldElem(0), FieldElem(Rational(17, 2)), h};
  const Point3 v3 = P(Rational(-11, 2), 0, 0), v4 = P(Rational(11, 2), 0, 0);
  const FieldElem g = orient6(v1, v2, v3, v4);
  const FieldElem expected = FieldElem(Rational(187, 2)) * t.generator(1);
  CHECK((g == expected || g == -expected));
}

TEST_CASE("mixed_product examples") {
  CHECK(mixed_product(P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(0, 0, 0)) == FieldElem(1));
  const Point3 a = P(2, 3, 5), b = P(-1, 4, 0), o = P(7, 7, 7);
  CHECK(mixed_product(a, b, o, o).is_zero());
  CHECK(mixed_product(a, b, P(1, 1, 1), o) == orient6(o, a, b, P(1, 1, 1)));
}

TEST_CASE("dist2 examples") {
  CHECK(dist2(P(0, Rational(-17, 2), 3), P(0, Rational(17, 2), 3)) == FieldElem(289));
  CHECK(dist2(P(Rational(-11, 2), 0, 0), P(Rational(11, 2), 0, 0)) == FieldElem(121));
  CHECK(dist2(P(1, 2, 3), P(1, 2, 3)).is_zero());
}

TEST_CASE("classifier examples") {
  CHECK(classify(P(0, 0, -1), P(0, 0, 1)) == PairTag::Intersecting);
  CHECK(classify(P(0, 0, 1), P(0, 0, 2)) == PairTag::Disjoint);
  CHECK(classify(P(5, 5, -1), P(5, 5, 1)) == PairTag::Disjoint);
  CHECK(classify(P(1, 0, -1), P(1, 0, 0)) == PairTag::NeedsStudy);
  CHECK(classify(P(1, 0, 0), P(1, 0, 1)) == PairTag::NeedsStudy);
  // crossing exactly on an edge line
  CHECK(classify(P(Rational(1, 2), Rational(1, 2), -1), P(Rational(1, 2), Rational(1, 2), 1)) == PairTag::NeedsStudy);
  // coplanar
  CHECK(classify(P(0, 0, 0), P(3, 3, 0)) == PairTag::NeedsStudy);
  CHECK_FALSE(classify_segment_triangle(P(1, 0, 0), P(1, 0, 1), Y1, Y2, Y3).detail.empty());
}

TEST_CASE("classifier with a shared vertex") {
  const SharedVertex s0{0, 0};
  CHECK(classify_segment_triangle(Y1, P(0, 0, 1), Y1, Y2, Y3, s0).tag == PairTag::SharedSubsimplex);
  CHECK(classify_segment_triangle(Y1, P(-2, 3, 0), Y1, Y2, Y3, s0).tag == PairTag::NeedsStudy);
  // shared vertex is the second endpoint and the third corner
  CHECK(classify_segment_triangle(P(4, 4, -2), Y3, Y1, Y2, Y3, SharedVertex{1, 2}).tag == PairTag::SharedSubsimplex);
  CHECK(geom_error([&] { classify_segment_triangle(P(0, 0, 1), P(0, 0, 2), Y1, Y2, Y3, s0); }) ==
        GeomError::Kind::InconsistentSharedVertex);
}

TEST_CASE("classifier rejects degenerate input") {
  CHECK(geom_error([&] { classify(P(1, 1, 1), P(1, 1, 1)); }) == GeomError::Kind::DegenerateSegment);
  CHECK(geom_error([&] { classify_segment_triangle(P(0, 0, -1), P(0, 0, 1), P(0, 0, 0), P(1, 1, 1), P(2, 2, 2)); }) ==
        GeomError::Kind::DegenerateTriangle);
}

TEST_CASE("float classifier uses the epsilon policy") {
  const Point3d y1{1, 0, 0}, y2{0, 1, 0}, y3{-1, -1, 0};
  CHECK(classify_segment_triangle<double>({0, 0, -1}, {0, 0, 1}, y1, y2, y3).tag == PairTag::Intersecting);
  CHECK(classify_segment_triangle<double>({0, 0, 1e-13}, {0, 0, 1}, y1, y2, y3).tag == PairTag::NeedsStudy);
  CHECK(classify_segment_triangle<double>({0, 0, 1e-13}, {0, 0, 1}, y1, y2, y3, std::nullopt, {1e-15}).tag ==
        PairTag::Disjoint);
}

TEST_CASE("resolver examples") {
  // coplanar, crossing the interior
  CHECK(resolve_needs_study(P(-3, 0, 0), P(3, Rational(1, 5), 0), Y1, Y2, Y3) == Resolution::ProperIntersection);
  // one endpoint on the plane, projection outside
  CHECK(resolve_needs_study(P(5, 5, 0), P(5, 5, 1), Y1, Y2, Y3) == Resolution::Disjoint);
  // one endpoint on the plane inside the triangle
  CHECK(resolve_needs_study(P(0, 0, 0), P(0, 0, 1), Y1, Y2, Y3) == Resolution::ProperIntersection);
  // the segment is the triangle edge y1y2
  CHECK(resolve_needs_study(Y1, Y2, Y1, Y2, Y3, SharedEdge{0, 1}) == Resolution::TouchOnly);
  CHECK(resolve_needs_study(Y2, Y1, Y1, Y2, Y3, SharedEdge{1, 0}) == Resolution::TouchOnly);
  CHECK(geom_error([&] { resolve_needs_study(Y1, Y3, Y1, Y2, Y3, SharedEdge{0, 1}); }) ==
        GeomError::Kind::InconsistentSharedVertex);
  // declaring only one endpoint shared leaves the rest of the edge as an intersection
  CHECK(resolve_needs_study(Y1, Y2, Y1, Y2, Y3, SharedVertex{0, 0}) == Resolution::ProperIntersection);
  // shared vertex, far endpoint in the plane but outside
  CHECK(resolve_needs_study(Y1, P(3, -3, 0), Y1, Y2, Y3, SharedVertex{0, 0}) == Resolution::TouchOnly);
  // coplanar, lying along the supporting line of an edge beyond the triangle
  CHECK(resolve_needs_study(P(2, -1, 0), P(3, -2, 0), Y1, Y2, Y3) == Resolution::Disjoint);
}

TEST_CASE("property: orient6 is antisymmetric and translation invariant") {
  std::mt19937_64 rng(21);
  const FieldTower t = gen::towers()[1].tower;
  auto rp = [&] { return Point3{gen::random_elem(rng, t), gen::random_elem(rng, t), gen::random_elem(rng, t)}; };
  for (int i = 0; i < 200; ++i) {
    const Point3 a = rp(), b = rp(), c = rp(), d = rp(), shift = rp();
    const FieldElem g = orient6(a, b, c, d);
    CHECK(orient6(b, a, c, d) == -g);
    CHECK(orient6(a, c, b, d) == -g);
    CHECK(orient6(a, b, d, c) == -g);
    CHECK(orient6(d, b, c, a) == -g);
    CHECK(orient6(a + shift, b + shift, c + shift, d + shift) == g);
  }
}

TEST_CASE("property: classifier agrees with the barycentric oracle") {
  std::mt19937_64 rng(22);
  int seen[4] = {};
  for (int i = 0; i < 3000; ++i) {
    // Small integer grids produce plenty of degenerate cases, fine grids general ones.
    const long range = i % 2 == 0 ? 2 : 30, den = i % 2 == 0 ? 1 : 7;
    const Q3 z1 = oracle::random_q3(rng, range, den), z2 = oracle::random_q3(rng, range, den);
    const Q3 y1 = oracle::random_q3(rng, range, den), y2 = oracle::random_q3(rng, range, den),
             y3 = oracle::random_q3(rng, range, den);
    const Q3 n = oracle::crossq(oracle::sub(y2, y1), oracle::sub(y3, y1));
    if (oracle::same(z1, z2) || (n.x == 0 && n.y == 0 && n.z == 0)) continue;
    const Point3 pz1 = oracle::to_point(z1), pz2 = oracle::to_point(z2), p1 = oracle::to_point(y1),
                 p2 = oracle::to_point(y2), p3 = oracle::to_point(y3);
    const PairTag expected = oracle::lemma_oracle(z1, z2, y1, y2, y3);
    const PairTag got = classify_segment_triangle(pz1, pz2, p1, p2, p3).tag;
    REQUIRE(got == expected);
    ++seen[static_cast<int>(got)];
    CHECK(classify_segment_triangle(pz2, pz1, p1, p2, p3).tag == got);
    CHECK(classify_segment_triangle(pz1, pz2, p2, p3, p1).tag == got);
  }
  CHECK(seen[static_cast<int>(PairTag::Intersecting)] > 100);
  CHECK(seen[static_cast<int>(PairTag::Disjoint)] > 100);
  CHECK(seen[static_cast<int>(PairTag::NeedsStudy)] > 20);
}

TEST_CASE("property: resolver agrees with the candidate-point oracle") {
  std::mt19937_64 rng(23);
  int resolved = 0;
  for (int i = 0; i < 20000 && resolved < 1500; ++i) {
    const Q3 y1 = oracle::random_q3(rng, 2, 1), y2 = oracle::random_q3(rng, 2, 1), y3 = oracle::random_q3(rng, 2, 1);
    const Q3 n = oracle::crossq(oracle::sub(y2, y1), oracle::sub(y3, y1));
    if (n.x == 0 && n.y == 0 && n.z == 0) continue;
    const bool share = i % 3 == 0;
    const Q3 z1 = share ? y1 : oracle::random_q3(rng, 2, 1);
    const Q3 z2 = oracle::random_q3(rng, 2, 1);
    if (oracle::same(z1, z2)) continue;
    if (share && (oracle::same(z2, y2) || oracle::same(z2, y3))) continue;
    if (!share && (oracle::same(z1, y1) || oracle::same(z1, y2) || oracle::same(z1, y3) || oracle::same(z2, y1) ||
                   oracle::same(z2, y2) || oracle::same(z2, y3)))
      continue;

    const std::optional<SharedVertex> shared = share ? std::optional<SharedVertex>(SharedVertex{0, 0}) : std::nullopt;
    const Point3 pz1 = oracle::to_point(z1), pz2 = oracle::to_point(z2), p1 = oracle::to_point(y1),
                 p2 = oracle::to_point(y2), p3 = oracle::to_point(y3);
    if (classify_segment_triangle(pz1, pz2, p1, p2, p3, shared).tag != PairTag::NeedsStudy) continue;
    ++resolved;
    const Resolution expected = oracle::resolution_oracle(z1, z2, y1, y2, y3, share ? std::optional<int>(0) : std::nullopt);
    REQUIRE(resolve_needs_study(pz1, pz2, p1, p2, p3, shared) == expected);
  }
  CHECK(resolved >= 500);
}
