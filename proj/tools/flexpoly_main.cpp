// flexpoly: build, check, measure and flex triangulated surfaces.
//
// Exit status of `check`: 0 Embedded, 1 NotEmbedded, 2 Inconclusive.
// Every command exits 3 on bad input (usage, parse, validation, I/O) and
// 4 when the computation itself fails.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "flexpoly/flex.hpp"
#include "flexpoly/model_io.hpp"
#include "flexpoly/steffen.hpp"

namespace fs = std::filesystem;
using namespace flexpoly;

namespace {

constexpr int kInputError = 3;
constexpr int kComputeError = 4;

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Embedded: return 0;
    case Verdict::NotEmbedded: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return kComputeError;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

struct BuildArgs {
  fs::path out;
  std::optional<int> precision;
  fs::path float_out;
};

int cmd_build_steffen(const BuildArgs& a) {
  const steffen::SteffenModel model = steffen::build_steffen();
  io::write_json(a.out, io::model_json(model.realization));
  std::cout << "wrote " << a.out.string() << ": " << model.complex.vertex_ids.size() << " vertices, "
            << model.complex.edges.size() << " edges, " << model.complex.faces.size() << " faces over "
            << model.tower.to_string() << "\n";
  if (a.precision) {
    fs::path float_out = a.float_out;
    if (float_out.empty()) float_out = fs::path(a.out).replace_extension(".float.json");
    io::write_json(float_out, io::model_json(model.realization, *a.precision));
    std::cout << "wrote " << float_out.string() << " (" << *a.precision << " decimals)\n";
  }
  return 0;
}

struct CheckArgs {
  fs::path model;
  std::vector<fs::path> split;
  std::string mode;
  double eps = kDefaultEpsilon;
  bool resolve = false;
  int workers = 0;
  fs::path out1, out2, report;
};

int cmd_check(const CheckArgs& a) {
  io::Model m;
  if (!a.split.empty()) {
    m = io::read_split_inputs(a.split[0], a.split[1], a.split[2], a.split[3]);
  } else if (!a.model.empty()) {
    m = io::read_model(a.model);
  } else {
    std::cerr << "check: give a model file or --split-inputs\n";
    return kInputError;
  }
  io::require_valid(m.complex);

  Mode mode = m.mode;
  if (a.mode == "exact") mode = Mode::Exact;
  if (a.mode == "float") mode = Mode::Float;
  const CheckOptions options{a.resolve, a.workers};
  const CheckReport report = mode == Mode::Exact ? check_embedded(io::realize_exact(m), options)
                                                 : check_embedded(io::realize_float(m, a.eps), options);

  const std::string out1 = join_lines(out1_lines(report));
  const std::string out2 = join_lines(out2_lines(report));
  if (!a.out1.empty()) io::write_text(a.out1, out1);
  if (!a.out2.empty()) io::write_text(a.out2, out2);
  if (!a.report.empty()) io::write_json(a.report, io::report_json(report));

  std::cout << to_string(report.verdict) << " (" << (mode == Mode::Exact ? "exact" : "float") << ", "
            << report.pairs_scanned << " pairs, " << report.out1.size() << " need study, " << report.out2.size()
            << " intersections)\n";
  if (a.out1.empty()) std::cout << out1;
  if (a.out2.empty()) std::cout << out2;
  return exit_code(report.verdict);
}

int cmd_volume(const fs::path& path) {
  const io::Model m = io::read_model(path);
  io::require_valid(m.complex);
  if (m.mode == Mode::Exact) {
    const FieldElem v = steffen::volume(io::realize_exact(m));
    std::cout << "exact:   " << v.to_string() << "\n";
    std::cout << "tree:    " << io::encode(v).dump() << "\n";
    std::cout << "decimal: " << approx(v, 17).to_string(15) << "\n";
  } else {
    const double v = steffen::volume(io::realize_float(m));
    std::printf("decimal: %.15f\n", v);
  }
  return 0;
}

struct FrameArgs {
  double t = 0;
  double eps = kDefaultEpsilon;
  fs::path out, obj;
  int digits = 9;
};

int cmd_flex_frame(const FrameArgs& a) {
  const flex::FlexFrame frame = flex::realize_flex(a.t, a.eps);
  const CheckReport report = check_embedded(frame.realization);
  if (!a.out.empty()) io::write_json(a.out, io::model_json(frame.realization));
  if (!a.obj.empty()) io::write_text(a.obj, io::obj_text(frame.realization, a.digits));
  std::printf("t = %.9f: %s, max edge residual %.3g\n", a.t, to_string(report.verdict).c_str(),
              flex::max_edge_residual(frame));
  std::cout << join_lines(out1_lines(report)) << join_lines(out2_lines(report));
  return exit_code(report.verdict);
}

struct ScanArgs {
  double from = 0, to = 0.25;
  int steps = 100;
  double eps = kDefaultEpsilon;
  double tolerance = 1e-6;
  int workers = 0;
  fs::path report, frames, animation;
  int digits = 9;
};

int cmd_flex_scan(const ScanArgs& a) {
  const auto samples = flex::scan_embeddedness(a.from, a.to, a.steps, a.eps, a.workers);

  io::Json j;
  j["epsilon"] = a.eps;
  j["samples"] = io::Json::array();
  j["transitions"] = io::Json::array();
  for (const auto& s : samples) {
    io::Json e{{"t", s.t}};
    e["verdict"] = s.verdict ? to_string(*s.verdict) : "Error";
    e["needs_study"] = s.needs_study;
    e["out2"] = io::Json::array();
    for (const auto& p : s.out2) e["out2"].push_back({{"edge", p.edge}, {"face", p.face}});
    if (!s.error.empty()) e["error"] = s.error;
    j["samples"].push_back(e);
    std::printf("t = %+.6f  %s\n", s.t, e["verdict"].get<std::string>().c_str());
  }

  for (std::size_t i = 1; i < samples.size(); ++i) {
    const auto &p = samples[i - 1], &q = samples[i];
    if (!p.verdict || !q.verdict || *p.verdict == *q.verdict) continue;
    if (*p.verdict != Verdict::Embedded && *q.verdict != Verdict::Embedded) continue;
    const bool forward = *p.verdict == Verdict::Embedded;
    const flex::Bracket b = flex::max_embedded_t(forward ? p.t : q.t, forward ? q.t : p.t, a.tolerance, a.eps);
    const flex::Sweep sw = flex::sweep_of(b.embedded);
    std::printf("verdict changes between t = %.6f and t = %.6f; bisection bracket [%.9f, %.9f]\n", p.t, q.t,
                std::min(b.embedded, b.not_embedded), std::max(b.embedded, b.not_embedded));
    std::printf("  v9 sweep over [-t, t] at the embedded end: chord %.6f, arc %.6f\n", sw.chord, sw.arc);
    j["transitions"].push_back(
        {{"embedded", b.embedded}, {"not_embedded", b.not_embedded}, {"chord", sw.chord}, {"arc", sw.arc}});
  }
  if (!a.report.empty()) io::write_json(a.report, j);

  if (!a.frames.empty() || !a.animation.empty()) {
    io::Json anim{{"frames", io::Json::array()}};
    if (!a.frames.empty()) fs::create_directories(a.frames);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (!samples[i].verdict) continue;
      const flex::FlexFrame frame = flex::realize_flex(samples[i].t, a.eps);
      if (!a.frames.empty()) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%04zu.obj", i);
        io::write_text(a.frames / name, io::obj_text(frame.realization, a.digits));
      }
      anim["frames"].push_back(io::frame_json(frame.t, frame.realization));
    }
    if (!a.animation.empty()) io::write_json(a.animation, anim);
  }
  return 0;
}

int cmd_export_obj(const fs::path& model, const fs::path& out, int digits) {
  const io::Model m = io::read_model(model);
  io::require_valid(m.complex);
  io::write_text(out, m.mode == Mode::Exact ? io::obj_text(io::realize_exact(m), digits)
                                            : io::obj_text(io::realize_float(m), digits));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embeddedness checks and flexes of triangulated surfaces"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build-steffen", "Build the Steffen polyhedron exactly and write it as a JSON model");
  b->add_option("--out", build.out, "Exact model path")->required();
  b->add_option("--precision", build.precision, "Also write a float model with this many decimals")
      ->check(CLI::Range(0, 60));
  b->add_option("--float-out", build.float_out, "Float model path (default: <out>.float.json)");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Test a model for self-intersections");
  c->add_option("model", check.model, "JSON model");
  c->add_option("--split-inputs", check.split, "Four lists s ss t tt instead of a model")->expected(4);
  c->add_option("--mode", check.mode, "exact or float (default: the model's mode)")
      ->check(CLI::IsMember({"exact", "float"}));
  c->add_option("--eps", check.eps, "Float-mode zero threshold")->check(CLI::NonNegativeNumber);
  c->add_flag("--resolve-degenerate", check.resolve, "Decide degenerate pairs instead of listing them");
  c->add_option("--workers", check.workers, "Scan threads (0: all)")->check(CLI::NonNegativeNumber);
  c->add_option("--out1", check.out1, "Pairs requiring additional study");
  c->add_option("--out2", check.out2, "Detected intersections");
  c->add_option("--report", check.report, "JSON report");

  fs::path volume_model;
  auto* v = app.add_subcommand("volume", "Enclosed volume of a closed model");
  v->add_option("model", volume_model, "JSON model")->required();

  FrameArgs frame;
  auto* f = app.add_subcommand("flex-frame", "Realize and check one frame S_t of the Steffen flex");
  f->add_option("--t", frame.t, "Flex parameter in radians")->required();
  f->add_option("--eps", frame.eps, "Float-mode zero threshold")->check(CLI::NonNegativeNumber);
  f->add_option("--out", frame.out, "Float JSON model of the frame");
  f->add_option("--obj", frame.obj, "OBJ export of the frame");
  f->add_option("--digits", frame.digits, "OBJ decimals")->check(CLI::Range(0, 30));

  ScanArgs scan;
  auto* s = app.add_subcommand("flex-scan", "Check evenly spaced frames of the Steffen flex");
  s->add_option("--from", scan.from, "First t");
  s->add_option("--to", scan.to, "Last t");
  s->add_option("--steps", scan.steps, "Intervals between samples")->check(CLI::PositiveNumber);
  s->add_option("--eps", scan.eps, "Float-mode zero threshold")->check(CLI::NonNegativeNumber);
  s->add_option("--tolerance", scan.tolerance, "Bisection tolerance in t")->check(CLI::PositiveNumber);
  s->add_option("--workers", scan.workers, "Scan threads (0: all)")->check(CLI::NonNegativeNumber);
  s->add_option("--report", scan.report, "JSON report of per-t verdicts");
  s->add_option("--frames", scan.frames, "Directory for one OBJ file per sample");
  s->add_option("--animation", scan.animation, "Single JSON file with every frame");
  s->add_option("--digits", scan.digits, "OBJ decimals")->check(CLI::Range(0, 30));

  fs::path obj_model, obj_out;
  int obj_digits = 9;
  auto* o = app.add_subcommand("export-obj", "Write a model as an approximate OBJ file");
  o->add_option("model", obj_model, "JSON model")->required();
  o->add_option("--out", obj_out, "OBJ path")->required();
  o->add_option("--precision", obj_digits, "Decimals per coordinate")->check(CLI::Range(0, 60));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*b) return cmd_build_steffen(build);
    if (*c) return cmd_check(check);
    if (*v) return cmd_volume(volume_model);
    if (*f) return cmd_flex_frame(frame);
    if (*s) return cmd_flex_scan(scan);
    if (*o) return cmd_export_obj(obj_model, obj_out, obj_digits);
  } catch (const io::ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const MeshError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == MeshError::Kind::InvalidComplex ? kInputError : kComputeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputeError;
  }
  return kComputeError;
}
