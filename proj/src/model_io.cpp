#include "flexpoly/model_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace flexpoly::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw ModelError(ModelError::Kind::Parse, what); }

Json rat(const Rational& r) { return Json{{"rat", rational_string(r)}}; }

Json generator_json(const FieldTower& tower, int level) {
  return Json{{"sqrt", encode(tower.radicand(level))}};
}

Rational rational_cell(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const NumfieldError&) {
    parse_error("not a number: \"" + text + "\"");
  }
}

double double_cell(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') parse_error("not a number: \"" + text + "\"");
  return v;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits) { return decimal_string(Rational(v), digits); }

std::string fixed(const FieldElem& x, int digits) { return decimal_string(approx(x, digits + 2).midpoint(), digits); }

std::pair<FieldElem, double> read_cell(const Json& cell, FieldTower& tower) {
  if (cell.is_string()) {
    const std::string s = cell.get<std::string>();
    return {FieldElem(rational_cell(s)), double_cell(s)};
  }
  if (cell.is_number_integer()) return {FieldElem(Rational(cell.get<long>())), cell.get<double>()};
  if (cell.is_number_float()) return {FieldElem(Rational(cell.get<double>())), cell.get<double>()};
  FieldElem x = decode(cell, tower);
  return {x, x.to_double()};
}

template <std::size_t N>
std::array<VertexId, N> id_tuple(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != N) parse_error(std::string(what) + " must list " + std::to_string(N) + " ids");
  std::array<VertexId, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    if (!j[i].is_number_integer()) parse_error(std::string(what) + " ids must be integers");
    out[i] = j[i].get<VertexId>();
  }
  return out;
}

void add_vertex_ids(Model& m) {
  std::set<VertexId> ids;
  for (const auto& [id, p] : m.approx) ids.insert(id);
  m.complex.vertex_ids.assign(ids.begin(), ids.end());
}

template <class T>
Json complex_json(const Realization<T>& r, const std::string& mode) {
  Json j;
  j["mode"] = mode;
  j["vertices"] = Json::array();
  j["edges"] = Json::array();
  j["faces"] = Json::array();
  for (const EdgeKey& e : r.complex().edges) j["edges"].push_back({e[0], e[1]});
  for (const FaceKey& f : r.complex().faces) j["faces"].push_back({f[0], f[1], f[2]});
  return j;
}

template <class T, class Format>
std::string obj(const Realization<T>& r, int digits, Format format) {
  std::ostringstream out;
  out << "# approximate: coordinates rounded to " << digits << " decimal places\n";
  out << "# vertex ids:";
  std::map<VertexId, int> index;
  for (const auto& [id, p] : r.coords()) {
    out << ' ' << id;
    index[id] = static_cast<int>(index.size()) + 1;
  }
  out << '\n';
  for (const auto& [id, p] : r.coords())
    out << "v " << format(p.x, digits) << ' ' << format(p.y, digits) << ' ' << format(p.z, digits) << '\n';
  for (const FaceKey& f : r.complex().faces)
    out << "f " << index.at(f[0]) << ' ' << index.at(f[1]) << ' ' << index.at(f[2]) << '\n';
  return out.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::filesystem::path& path, std::size_t width) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(read_text(path));
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (cells.size() != width)
      parse_error(path.string() + ":" + std::to_string(number) + ": expected " + std::to_string(width) + " fields");
    rows.push_back(std::move(cells));
  }
  return rows;
}

VertexId id_cell(const std::string& s) {
  VertexId v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) parse_error("not a vertex id: \"" + s + "\"");
  return v;
}

}  // namespace

Json encode(const FieldElem& x) {
  const FieldTower& tower = x.tower();
  const auto coeffs = x.coefficients();
  Json terms = Json::array();
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m] == 0) continue;
    Json factors = Json::array();
    if (m == 0 || coeffs[m] != 1) factors.push_back(rat(coeffs[m]));
    for (int level = 1; level <= tower.depth(); ++level)
      if (m & (std::size_t{1} << (level - 1))) factors.push_back(generator_json(tower, level));
    terms.push_back(factors.size() == 1 ? factors[0] : Json{{"mul", factors}});
  }
  if (terms.empty()) return rat(0);
  if (terms.size() == 1) return terms[0];
  return Json{{"add", terms}};
}

FieldElem decode(const Json& expr, FieldTower& tower) {
  if (!expr.is_object() || expr.size() != 1) parse_error("numexpr must be an object with one key: " + expr.dump());
  const auto& [key, arg] = *expr.items().begin();
  if (key == "rat") {
    if (!arg.is_string()) parse_error("\"rat\" takes a string");
    return FieldElem(rational_cell(arg.get<std::string>()));
  }
  if (key == "neg") return -decode(arg, tower);
  if (key == "add" || key == "mul") {
    if (!arg.is_array() || arg.empty()) parse_error("\"" + key + "\" takes a nonempty array");
    FieldElem acc = decode(arg[0], tower);
    for (std::size_t i = 1; i < arg.size(); ++i) {
      const FieldElem next = decode(arg[i], tower);
      acc = key == "add" ? acc + next : acc * next;
    }
    return acc;
  }
  if (key == "sqrt") {
    const FieldElem here = decode(arg, tower).lifted(tower);
    if (here.is_zero()) return here;
    if (sign(here) < 0) parse_error("square root of a negative number: " + arg.dump());
    for (int level = 1; level <= tower.depth(); ++level)
      if (here == tower.radicand(level).lifted(tower)) return tower.generator(level);
    if (auto root = positive_sqrt_in_field(here)) return *root;
    tower = adjoin(tower, here);
    return tower.generator(tower.depth());
  }
  parse_error("unknown numexpr key \"" + key + "\"");
}

Json encode_tower(const FieldTower& tower) {
  Json out = Json::array();
  for (int level = 1; level <= tower.depth(); ++level) out.push_back(encode(tower.radicand(level)));
  return out;
}

FieldTower decode_tower(const Json& field) {
  if (!field.is_array()) parse_error("\"field\" must be an array");
  FieldTower tower;
  for (const Json& r : field) {
    const FieldElem d = decode(r, tower);
    try {
      tower = adjoin(tower, d);
    } catch (const NumfieldError& e) {
      parse_error(std::string("bad field radicand: ") + e.what());
    }
  }
  return tower;
}

Model parse_model(const Json& j) {
  if (!j.is_object()) parse_error("model must be a JSON object");
  for (const char* key : {"vertices", "edges", "faces"})
    if (!j.contains(key) || !j[key].is_array()) parse_error(std::string("model needs an array \"") + key + "\"");
  Model m;
  const std::string mode = j.value("mode", "exact");
  if (mode == "exact") {
    m.mode = Mode::Exact;
  } else if (mode == "float") {
    m.mode = Mode::Float;
  } else {
    parse_error("mode must be \"exact\" or \"float\"");
  }

  FieldTower tower = j.contains("field") ? decode_tower(j["field"]) : FieldTower{};
  for (const Json& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_number_integer() || !v.contains("coords") ||
        !v["coords"].is_array() || v["coords"].size() != 3)
      parse_error("vertex entries need an integer \"id\" and three \"coords\"");
    const VertexId id = v["id"].get<VertexId>();
    if (m.exact.count(id)) parse_error("vertex " + std::to_string(id) + " listed twice");
    std::array<std::pair<FieldElem, double>, 3> c;
    try {
      for (std::size_t i = 0; i < 3; ++i) c[i] = read_cell(v["coords"][i], tower);
    } catch (const NumfieldError& e) {
      parse_error("vertex " + std::to_string(id) + ": " + e.what());
    }
    m.exact[id] = {c[0].first, c[1].first, c[2].first};
    m.approx[id] = {c[0].second, c[1].second, c[2].second};
    m.complex.vertex_ids.push_back(id);
  }
  for (const Json& e : j["edges"]) {
    const auto ids = id_tuple<2>(e, "edge");
    m.complex.edges.push_back(edge_key(ids[0], ids[1]));
  }
  for (const Json& f : j["faces"]) m.complex.faces.push_back(id_tuple<3>(f, "face"));
  m.complex.with_boundary = j.value("with_boundary", false);
  return m;
}

Model read_model(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
  return parse_model(j);
}

Model read_split_inputs(const std::filesystem::path& s, const std::filesystem::path& ss,
                        const std::filesystem::path& t, const std::filesystem::path& tt) {
  const auto edges = csv_rows(s, 2), edge_coords = csv_rows(ss, 6);
  const auto faces = csv_rows(t, 3), face_coords = csv_rows(tt, 9);
  if (edges.size() != edge_coords.size()) parse_error("s and ss list different numbers of edges");
  if (faces.size() != face_coords.size()) parse_error("t and tt list different numbers of faces");

  Model m;
  std::map<VertexId, std::array<Rational, 3>> seen;
  auto place = [&](VertexId id, const std::vector<std::string>& row, std::size_t offset) {
    std::array<Rational, 3> p;
    for (std::size_t i = 0; i < 3; ++i) p[i] = rational_cell(row[offset + i]);
    auto [it, fresh] = seen.emplace(id, p);
    if (!fresh && it->second != p) parse_error("vertex " + std::to_string(id) + " has inconsistent coordinates");
    if (fresh) {
      m.exact[id] = {FieldElem(p[0]), FieldElem(p[1]), FieldElem(p[2])};
      m.approx[id] = {double_cell(row[offset]), double_cell(row[offset + 1]), double_cell(row[offset + 2])};
    }
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const VertexId a = id_cell(edges[i][0]), b = id_cell(edges[i][1]);
    m.complex.edges.push_back(edge_key(a, b));
    place(a, edge_coords[i], 0);
    place(b, edge_coords[i], 3);
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const FaceKey f{id_cell(faces[i][0]), id_cell(faces[i][1]), id_cell(faces[i][2])};
    m.complex.faces.push_back(f);
    for (std::size_t k = 0; k < 3; ++k) place(f[k], face_coords[i], 3 * k);
  }
  add_vertex_ids(m);
  return m;
}

void require_valid(const SurfaceComplex& c) {
  const auto violations = validate_complex(c);
  if (violations.empty()) return;
  std::string what = "invalid complex:";
  for (const auto& v : violations) what += "\n  " + v;
  throw ModelError(ModelError::Kind::Validation, what);
}

ExactRealization realize_exact(const Model& m) { return realize(m.complex, m.exact); }

FloatRealization realize_float(const Model& m, double epsilon) { return realize(m.complex, m.approx, epsilon); }

Json model_json(const ExactRealization& r) {
  Json j = complex_json(r, "exact");
  j["field"] = encode_tower(r.tower());
  for (const auto& [id, p] : r.coords())
    j["vertices"].push_back({{"id", id}, {"coords", {encode(p.x), encode(p.y), encode(p.z)}}});
  return j;
}

Json model_json(const ExactRealization& r, int digits) {
  Json j = complex_json(r, "float");
  for (const auto& [id, p] : r.coords())
    j["vertices"].push_back({{"id", id}, {"coords", {fixed(p.x, digits), fixed(p.y, digits), fixed(p.z, digits)}}});
  return j;
}

Json model_json(const FloatRealization& r, std::optional<int> digits) {
  Json j = complex_json(r, "float");
  auto cell = [&](double v) { return digits ? fixed(v, *digits) : shortest(v); };
  for (const auto& [id, p] : r.coords())
    j["vertices"].push_back({{"id", id}, {"coords", {cell(p.x), cell(p.y), cell(p.z)}}});
  return j;
}

std::string obj_text(const ExactRealization& r, int digits) {
  return obj(r, digits, [](const FieldElem& x, int d) { return fixed(x, d); });
}

std::string obj_text(const FloatRealization& r, int digits) {
  return obj(r, digits, [](double x, int d) { return fixed(x, d); });
}

Json report_json(const CheckReport& report) {
  auto pair = [](const EdgeKey& e, const FaceKey& f) {
    return Json{{"edge", {e[0], e[1]}}, {"face", {f[0], f[1], f[2]}}};
  };
  Json j;
  j["verdict"] = to_string(report.verdict);
  j["pairs_scanned"] = report.pairs_scanned;
  j["out1"] = Json::array();
  j["out2"] = Json::array();
  j["resolved"] = Json::array();
  for (const auto& e : report.out1) {
    Json x = pair(e.edge, e.face);
    x["reason"] = e.reason;
    j["out1"].push_back(x);
  }
  for (const auto& e : report.out2) j["out2"].push_back(pair(e.edge, e.face));
  for (const auto& e : report.resolved) {
    Json x = pair(e.edge, e.face);
    x["reason"] = e.reason;
    x["outcome"] = to_string(e.outcome);
    j["resolved"].push_back(x);
  }
  return j;
}

Json frame_json(double t, const FloatRealization& r) {
  Json j{{"t", t}, {"vertices", Json::array()}};
  for (const auto& [id, p] : r.coords()) j["vertices"].push_back({{"id", id}, {"coords", {p.x, p.y, p.z}}});
  return j;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError(ModelError::Kind::Io, "cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw ModelError(ModelError::Kind::Io, "cannot write " + path.string());
}

void write_json(const std::filesystem::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace flexpoly::io
