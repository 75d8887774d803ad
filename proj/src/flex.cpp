#include "flexpoly/flex.hpp"

#include <omp.h>

#include <numbers>

#include "flexpoly/steffen.hpp"

namespace flexpoly::flex {

namespace {

struct Seed {
  std::map<VertexId, Point3d> coords;
  std::map<VertexId, int> branch;
};

const Seed& seed() {
  static const Seed s = [] {
    const steffen::SteffenModel model = steffen::build_steffen();
    Seed out;
    for (const auto& [id, p] : model.realization.coords()) out.coords[id] = to_double(p);
    out.branch = model.branch;
    return out;
  }();
  return s;
}

double distance(const Point3d& a, const Point3d& b) { return std::sqrt(dist2(a, b)); }

// Places v5..v8 for the given v9. `previous` selects branches by proximity;
// without it the exact t = 0 branch indices are reused.
std::map<VertexId, int> place(std::map<VertexId, Point3d>& coords, double t,
                              const std::map<VertexId, Point3d>* previous) {
  std::map<VertexId, int> record;
  for (const steffen::PlacementRule& rule : steffen::combinatorics().placements) {
    const auto& [s1, s2, s3] = rule.spheres;
    std::array<Point3d, 2> c;
    try {
      c = steffen::trilaterate(coords.at(s1.center), std::pow(s1.length.get_d(), 2), coords.at(s2.center),
                               std::pow(s2.length.get_d(), 2), coords.at(s3.center), std::pow(s3.length.get_d(), 2));
    } catch (const steffen::SteffenError& e) {
      if (e.kind() != steffen::SteffenError::Kind::NegativeDiscriminant) throw;
      throw FlexError(FlexError::Kind::DiscriminantNegative,
                      "v" + std::to_string(rule.vertex) + " cannot be placed at t = " + std::to_string(t));
    }
    int idx;
    if (previous) {
      const Point3d& before = previous->at(rule.vertex);
      idx = distance(c[0], before) <= distance(c[1], before) ? 0 : 1;
    } else {
      idx = seed().branch.at(rule.vertex);
    }
    coords[rule.vertex] = c[idx];
    record[rule.vertex] = idx;
  }
  return record;
}

std::map<VertexId, Point3d> fixed_vertices(double t) {
  std::map<VertexId, Point3d> coords;
  for (VertexId id : {1, 2, 3, 4}) coords[id] = seed().coords.at(id);
  coords[9] = v9_of_t(t);
  return coords;
}

}  // namespace

Point3d v9_of_t(double t) {
  if (!(std::abs(t) < std::numbers::pi))
    throw FlexError(FlexError::Kind::OutOfRange, "flex parameter must satisfy |t| < pi");
  return {0.0, kGammaRadius * std::sin(t), -kGammaRadius * std::cos(t)};
}

FlexFrame realize_flex(double t, double epsilon, const FlexFrame* previous) {
  std::map<VertexId, Point3d> coords = fixed_vertices(t);
  std::map<VertexId, int> record;
  if (previous) {
    record = place(coords, t, &previous->realization.coords());
  } else {
    // March from the exact configuration so each vertex stays on its branch.
    const int steps = static_cast<int>(std::ceil(std::abs(t) / kMarchStep));
    std::map<VertexId, Point3d> current = seed().coords;
    for (int i = 1; i <= steps; ++i) {
      const double ti = t * i / steps;
      std::map<VertexId, Point3d> next = fixed_vertices(ti);
      record = place(next, ti, &current);
      current = std::move(next);
    }
    if (steps == 0) {
      record = place(coords, t, nullptr);
    } else {
      coords = std::move(current);
    }
  }
  FlexFrame frame;
  frame.t = t;
  frame.realization = realize(steffen::combinatorics().complex, std::move(coords), epsilon);
  frame.branch_record = std::move(record);
  return frame;
}

double max_edge_residual(const FlexFrame& frame) {
  double worst = 0;
  for (const auto& [e, length] : steffen::combinatorics().lengths) {
    const double d = distance(frame.realization.at(e[0]), frame.realization.at(e[1]));
    worst = std::max(worst, std::abs(d - length.get_d()));
  }
  return worst;
}

std::vector<ScanSample> scan_embeddedness(double t_from, double t_to, int steps, double epsilon, int workers) {
  if (steps < 1) throw std::invalid_argument("scan needs steps >= 1");
  seed();  // build once before the workers start
  std::vector<ScanSample> samples(static_cast<std::size_t>(steps) + 1);
  const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i <= steps; ++i) {
    ScanSample& s = samples[i];
    s.t = t_from + (t_to - t_from) * i / steps;
    try {
      const FlexFrame frame = realize_flex(s.t, epsilon);
      const CheckReport report = check_embedded_serial(frame.realization);
      s.verdict = report.verdict;
      s.out2 = report.out2;
      s.needs_study = report.out1.size();
    } catch (const std::exception& e) {
      s.error = e.what();
    }
  }
  return samples;
}

Verdict verdict_at(double t, double epsilon) {
  return check_embedded_serial(realize_flex(t, epsilon).realization).verdict;
}

Bracket max_embedded_t(double t_embedded, double t_not_embedded, double tolerance, double epsilon) {
  if (!(tolerance > 0)) throw std::invalid_argument("bisection tolerance must be positive");
  if (verdict_at(t_embedded, epsilon) != Verdict::Embedded || verdict_at(t_not_embedded, epsilon) == Verdict::Embedded)
    throw FlexError(FlexError::Kind::BracketInvalid, "bracket endpoints must be embedded and not embedded");
  Bracket b{t_embedded, t_not_embedded};
  while (b.width() > tolerance) {
    const double mid = 0.5 * (b.embedded + b.not_embedded);
    if (verdict_at(mid, epsilon) == Verdict::Embedded) {
      b.embedded = mid;
    } else {
      b.not_embedded = mid;
    }
  }
  return b;
}

Sweep sweep_of(double t) {
  return {distance(v9_of_t(t), v9_of_t(-t)), 2.0 * kGammaRadius * std::abs(t)};
}

}  // namespace flexpoly::flex
