#include "flexpoly/checker.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <optional>

namespace flexpoly {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Embedded: return "Embedded";
    case Verdict::NotEmbedded: return "NotEmbedded";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Sharing shared_classification(const EdgeKey& edge, const FaceKey& face) {
  auto in_face = [&](VertexId v) { return std::find(face.begin(), face.end(), v) != face.end(); };
  const bool a = in_face(edge[0]), b = in_face(edge[1]);
  if (a && b) return {SharedKind::Subset, 0};
  if (a) return {SharedKind::OnePoint, edge[0]};
  if (b) return {SharedKind::OnePoint, edge[1]};
  return {SharedKind::Disjoint, 0};
}

namespace {

struct PairResult {
  std::optional<StudyEntry> study;
  std::optional<IntersectionEntry> hit;
  std::optional<ResolutionEntry> resolution;
};

template <class T>
PairResult check_pair(const Realization<T>& r, const EdgeKey& edge_raw, const FaceKey& face_raw, bool resolve) {
  const EdgeKey edge = edge_key(edge_raw[0], edge_raw[1]);
  const FaceKey face = face_key(face_raw);
  PairResult out;

  const Sharing sharing = shared_classification(edge, face);
  if (sharing.kind == SharedKind::Subset) return out;

  std::optional<SharedVertex> shared;
  if (sharing.kind == SharedKind::OnePoint) {
    shared = SharedVertex{edge[0] == sharing.vertex ? 0 : 1,
                          static_cast<int>(std::find(face.begin(), face.end(), sharing.vertex) - face.begin())};
  }

  const auto& z1 = r.at(edge[0]);
  const auto& z2 = r.at(edge[1]);
  const auto& y1 = r.at(face[0]);
  const auto& y2 = r.at(face[1]);
  const auto& y3 = r.at(face[2]);

  PairVerdict v;
  try {
    v = classify_segment_triangle(z1, z2, y1, y2, y3, shared, r.signs());
  } catch (const GeomError& e) {
    if (e.kind() != GeomError::Kind::InconsistentSharedVertex) throw;
    out.study = StudyEntry{edge, face, e.what()};
    return out;
  }

  switch (v.tag) {
    case PairTag::Disjoint:
    case PairTag::SharedSubsimplex:
      break;
    case PairTag::Intersecting:
      out.hit = IntersectionEntry{edge, face};
      break;
    case PairTag::NeedsStudy:
      if (!resolve) {
        out.study = StudyEntry{edge, face, v.detail};
      } else {
        const Resolution res = resolve_needs_study(z1, z2, y1, y2, y3, shared, r.signs());
        out.resolution = ResolutionEntry{edge, face, v.detail, res};
        if (res == Resolution::ProperIntersection) out.hit = IntersectionEntry{edge, face};
      }
      break;
  }
  return out;
}

template <class Entry>
void sort_entries(std::vector<Entry>& v) {
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.edge, a.face) < std::tie(b.edge, b.face);
  });
}

CheckReport merge(std::vector<PairResult>& results) {
  CheckReport report;
  report.pairs_scanned = results.size();
  for (PairResult& p : results) {
    if (p.study) report.out1.push_back(std::move(*p.study));
    if (p.hit) report.out2.push_back(*p.hit);
    if (p.resolution) report.resolved.push_back(std::move(*p.resolution));
  }
  sort_entries(report.out1);
  sort_entries(report.out2);
  sort_entries(report.resolved);
  if (!report.out2.empty()) {
    report.verdict = Verdict::NotEmbedded;
  } else if (!report.out1.empty()) {
    report.verdict = Verdict::Inconclusive;
  } else {
    report.verdict = Verdict::Embedded;
  }
  return report;
}

}  // namespace

template <class T>
CheckReport check_embedded_serial(const Realization<T>& r, bool resolve_degenerate) {
  const auto& c = r.complex();
  std::vector<PairResult> results;
  results.reserve(c.edges.size() * c.faces.size());
  for (const EdgeKey& e : c.edges)
    for (const FaceKey& f : c.faces) results.push_back(check_pair(r, e, f, resolve_degenerate));
  return merge(results);
}

template <class T>
CheckReport check_embedded(const Realization<T>& r, const CheckOptions& options) {
  const auto& c = r.complex();
  const long n_faces = static_cast<long>(c.faces.size());
  const long n_pairs = static_cast<long>(c.edges.size()) * n_faces;
  std::vector<PairResult> results(static_cast<std::size_t>(n_pairs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_pairs));
  const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (long i = 0; i < n_pairs; ++i) {
    try {
      results[i] = check_pair(r, c.edges[i / n_faces], c.faces[i % n_faces], options.resolve_degenerate);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  // Rethrow the failure of the first pair in scan order so the error is
  // schedule independent.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return merge(results);
}

std::vector<std::string> out1_lines(const CheckReport& report) {
  std::vector<std::string> lines;
  for (const auto& e : report.out1)
    lines.push_back("The case of (edge " + to_string(e.edge) + ", face " + to_string(e.face) +
                    ") requires additional study");
  return lines;
}

std::vector<std::string> out2_lines(const CheckReport& report) {
  std::vector<std::string> lines;
  for (const auto& e : report.out2)
    lines.push_back("The edge " + to_string(e.edge) + " intersects the face " + to_string(e.face));
  return lines;
}

template CheckReport check_embedded(const ExactRealization&, const CheckOptions&);
template CheckReport check_embedded(const FloatRealization&, const CheckOptions&);
template CheckReport check_embedded_serial(const ExactRealization&, bool);
template CheckReport check_embedded_serial(const FloatRealization&, bool);

}  // namespace flexpoly
