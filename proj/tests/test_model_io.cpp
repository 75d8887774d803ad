#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <functional>

#include "flexpoly/model_io.hpp"
#include "flexpoly/steffen.hpp"
#include "support/generators.hpp"

using namespace flexpoly;
using namespace flexpoly::io;

namespace {

const std::filesystem::path kFixtures = FLEXPOLY_FIXTURES;

ModelError::Kind model_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const ModelError& e) {
    return e.kind();
  }
  FAIL("expected ModelError");
  return ModelError::Kind::Io;
}

bool same_coefficients(const FieldElem& a, const FieldElem& b) {
  const auto ca = a.coefficients(), cb = b.coefficients();
  return a.tower() == b.tower() && std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

}  // namespace

TEST_CASE("encode examples") {
  CHECK(encode(FieldElem(0)) == Json::parse(R"({"rat": "0"})"));
  CHECK(encode(FieldElem(Rational(-17, 2))) == Json::parse(R"({"rat": "-17/2"})"));
  const FieldTower t = adjoin(FieldTower{}, 166);
  CHECK(encode(FieldElem(Rational(1, 2)) * t.generator(1)) ==
        Json::parse(R"({"mul": [{"rat": "1/2"}, {"sqrt": {"rat": "166"}}]})"));
  CHECK(encode(t.generator(1)) == Json::parse(R"({"sqrt": {"rat": "166"}})"));
  CHECK(encode(FieldElem(3) + t.generator(1)) ==
        Json::parse(R"({"add": [{"rat": "3"}, {"sqrt": {"rat": "166"}}]})"));
}

TEST_CASE("decode examples and errors") {
  FieldTower t;
  const FieldElem x = decode(Json::parse(R"({"add": [{"rat": "1/2"}, {"neg": {"sqrt": {"rat": "2"}}}]})"), t);
  CHECK(t.to_string() == "Q(sqrt(2))");
  CHECK(x == FieldElem(Rational(1, 2)) - t.generator(1));
  // a square root already in the field does not grow the tower
  const FieldElem y = decode(Json::parse(R"({"sqrt": {"rat": "8"}})"), t);
  CHECK(t.depth() == 1);
  CHECK(y == FieldElem(2) * t.generator(1));
  CHECK(decode(Json::parse(R"({"sqrt": {"rat": "9/4"}})"), t) == FieldElem(Rational(3, 2)));
  CHECK(decode(Json::parse(R"({"mul": [{"sqrt": {"rat": "2"}}, {"sqrt": {"rat": "2"}}]})"), t) == FieldElem(2));

  for (const char* bad : {R"({"sqrt": {"rat": "-1"}})", R"({"rat": "x"})", R"({"pow": [1, 2]})", R"([1, 2])",
                          R"({"add": {"rat": "1"}})"}) {
    CAPTURE(bad);
    FieldTower u;
    CHECK(model_error([&] { decode(Json::parse(bad), u); }) == ModelError::Kind::Parse);
  }
}

TEST_CASE("property: encode and decode round-trip coefficient for coefficient") {
  std::mt19937_64 rng(61);
  for (const auto& [name, tower] : gen::towers()) {
    CAPTURE(name);
    FieldTower t = decode_tower(encode_tower(tower));
    CHECK(t == tower);
    for (int i = 0; i < 60; ++i) {
      const FieldElem x = gen::random_elem(rng, tower);
      const Json j = Json::parse(encode(x).dump());
      const FieldElem back = decode(j, t);
      CHECK(t == tower);
      CHECK(same_coefficients(back.lifted(tower), x));
    }
  }
}

TEST_CASE("the Steffen model round-trips through JSON") {
  const steffen::SteffenModel m = steffen::build_steffen();
  const Json j = Json::parse(model_json(m.realization).dump(2));
  CHECK(j["mode"] == "exact");
  CHECK(j["field"].size() == 3);
  const Model back = parse_model(j);
  const ExactRealization r = realize_exact(back);
  CHECK(r.tower() == m.tower);
  for (const auto& [id, p] : m.realization.coords()) {
    CAPTURE(id);
    CHECK(same_coefficients(r.at(id).x, p.x));
    CHECK(same_coefficients(r.at(id).y, p.y));
    CHECK(same_coefficients(r.at(id).z, p.z));
  }
  CHECK(r.complex().edges == m.realization.complex().edges);
  CHECK(r.complex().faces == m.realization.complex().faces);

  const Json f = model_json(m.realization, 6);
  CHECK(f["mode"] == "float");
  const Json v6 = f["vertices"][5];
  CHECK(v6["id"] == 6);
  CHECK(v6["coords"][0] == "6.895595");
  CHECK(v6["coords"][1] == "-4.796312");
  const Model fm = parse_model(f);
  CHECK(fm.mode == Mode::Float);
  CHECK(std::abs(fm.approx.at(6).x - 6.895595) < 1e-12);
}

TEST_CASE("read_model fixtures") {
  const Model tetra = read_model(kFixtures / "steffen_base_tetra.json");
  const ExactRealization r = realize_exact(tetra);
  CHECK(r.tower().to_string() == "Q(sqrt(166))");
  CHECK(dist2(r.at(1), r.at(2)) == FieldElem(289));
  CHECK(steffen::volume(r) == FieldElem(Rational(187, 12)) * r.tower().generator(1));

  const Model unit = read_model(kFixtures / "tetra_unit_float.json");
  CHECK(unit.mode == Mode::Float);
  CHECK(steffen::volume(realize_float(unit)) == doctest::Approx(1.0 / 6));
  CHECK(steffen::volume(realize_exact(read_model(kFixtures / "tetra_unit.json"))) == FieldElem(Rational(1, 6)));

  CHECK(model_error([] { read_model(kFixtures / "malformed.json"); }) == ModelError::Kind::Parse);
  CHECK(model_error([] { read_model(kFixtures / "missing.json"); }) == ModelError::Kind::Io);
  const Model open = read_model(kFixtures / "tetra_open.json");
  CHECK(model_error([&] { require_valid(open.complex); }) == ModelError::Kind::Validation);
  const Model bounded = read_model(kFixtures / "tetra_open_boundary.json");
  CHECK(bounded.complex.with_boundary);
  require_valid(bounded.complex);
}

TEST_CASE("parse_model rejects malformed documents") {
  const char* docs[] = {
      R"({"edges": [], "faces": []})",
      R"({"mode": "fuzzy", "vertices": [], "edges": [], "faces": []})",
      R"({"vertices": [{"id": 1, "coords": [0, 0]}], "edges": [], "faces": []})",
      R"({"vertices": [{"id": "a", "coords": [0, 0, 0]}], "edges": [], "faces": []})",
      R"({"vertices": [{"id": 1, "coords": ["1/0", 0, 0]}], "edges": [], "faces": []})",
      R"({"vertices": [{"id": 1, "coords": [0, 0, 0]}], "edges": [[1]], "faces": []})",
      R"({"vertices": [{"id": 1, "coords": [0, 0, 0]}], "edges": [], "faces": [[1, 2, "x"]]})",
  };
  for (const char* d : docs) {
    CAPTURE(d);
    CHECK(model_error([&] { parse_model(Json::parse(d)); }) == ModelError::Kind::Parse);
  }
}

TEST_CASE("split inputs") {
  const Model m = read_split_inputs(kFixtures / "split_s.txt", kFixtures / "split_ss.txt", kFixtures / "split_t.txt",
                                    kFixtures / "split_tt.txt");
  const Model j = read_model(kFixtures / "bipyramid_piercing.json");
  CHECK(m.complex.vertex_ids == std::vector<VertexId>{1, 2, 3, 4, 5});
  CHECK(m.complex.edges.size() == 9);
  CHECK(m.complex.faces.size() == 6);
  const CheckReport a = check_embedded_serial(realize_exact(m)), b = check_embedded_serial(realize_exact(j));
  CHECK(a == b);
  CHECK(model_error([] {
          read_split_inputs(kFixtures / "split_s.txt", kFixtures / "split_ss.txt", kFixtures / "split_t.txt",
                            kFixtures / "split_tt_inconsistent.txt");
        }) == ModelError::Kind::Parse);
  CHECK(model_error([] {
          read_split_inputs(kFixtures / "split_s.txt", kFixtures / "split_tt.txt", kFixtures / "split_t.txt",
                            kFixtures / "split_tt.txt");
        }) == ModelError::Kind::Parse);
}

TEST_CASE("OBJ export") {
  const Model m = read_model(kFixtures / "steffen_base_tetra.json");
  const std::string text = obj_text(realize_exact(m), 4);
  CHECK(text ==
        "# approximate: coordinates rounded to 4 decimal places\n"
        "# vertex ids: 1 2 3 4\n"
        "v 0.0000 -8.5000 6.4420\n"
        "v 0.0000 8.5000 6.4420\n"
        "v -5.5000 0.0000 0.0000\n"
        "v 5.5000 0.0000 0.0000\n"
        "f 1 2 3\n"
        "f 1 2 4\n"
        "f 1 3 4\n"
        "f 2 3 4\n");
  const std::string ft = obj_text(realize_float(read_model(kFixtures / "tetra_unit_float.json")), 2);
  CHECK(ft.find("v 1.00 0.00 0.00\n") != std::string::npos);
}

TEST_CASE("report JSON") {
  const Model deg = read_model(kFixtures / "bipyramid_degenerate.json");
  const CheckReport rep = check_embedded_serial(realize_exact(deg));
  const Json j = report_json(rep);
  CHECK(j["verdict"] == "Inconclusive");
  CHECK(j["pairs_scanned"] == 54);
  CHECK(j["out2"].empty());
  REQUIRE(j["out1"].size() == rep.out1.size());
  CHECK(j["out1"][0]["edge"] == Json::parse("[1, 4]"));
  CHECK(j["out1"][0]["face"] == Json::parse("[2, 3, 5]"));
  CHECK(j["out1"][0]["reason"].is_string());

  const Json r = report_json(check_embedded_serial(realize_exact(deg), true));
  CHECK(r["out1"].empty());
  REQUIRE(r["resolved"].size() == rep.out1.size());
  CHECK(r["resolved"][0].contains("outcome"));

  const Json frame = frame_json(0.5, realize_float(read_model(kFixtures / "tetra_unit_float.json")));
  CHECK(frame["t"] == 0.5);
  CHECK(frame["vertices"].size() == 4);
  CHECK(frame["vertices"][1]["coords"] == Json::parse("[1.0, 0.0, 0.0]"));
}
