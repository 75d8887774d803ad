#pragma once

#include <string>
#include <vector>

#include "flexpoly/mesh.hpp"

namespace flexpoly {

enum class Verdict { Embedded, NotEmbedded, Inconclusive };

std::string to_string(Verdict v);

enum class SharedKind { Subset, OnePoint, Disjoint };

struct Sharing {
  SharedKind kind = SharedKind::Disjoint;
  VertexId vertex = 0;  // the common vertex for OnePoint
};

/// Purely combinatorial relation of an edge and a face.
Sharing shared_classification(const EdgeKey& edge, const FaceKey& face);

/// "requires additional study"
struct StudyEntry {
  EdgeKey edge;
  FaceKey face;
  std::string reason;
  friend bool operator==(const StudyEntry&, const StudyEntry&) = default;
};

/// "intersects"
struct IntersectionEntry {
  EdgeKey edge;
  FaceKey face;
  friend bool operator==(const IntersectionEntry&, const IntersectionEntry&) = default;
};

/// A study case settled by resolve_needs_study.
struct ResolutionEntry {
  EdgeKey edge;
  FaceKey face;
  std::string reason;
  Resolution outcome;
  friend bool operator==(const ResolutionEntry&, const ResolutionEntry&) = default;
};

/// verdict is Embedded iff out1 and out2 are empty, NotEmbedded iff out2 is
/// nonempty. Entries are sorted by (edge, face) with sorted vertex ids.
struct CheckReport {
  Verdict verdict = Verdict::Embedded;
  std::vector<StudyEntry> out1;
  std::vector<IntersectionEntry> out2;
  std::vector<ResolutionEntry> resolved;
  std::size_t pairs_scanned = 0;
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct CheckOptions {
  /// Settle NeedsStudy pairs exactly instead of listing them in out1.
  bool resolve_degenerate = false;
  /// OpenMP threads for the pair scan; 0 uses the runtime default.
  int workers = 0;
};

/// Scans every (edge, face) pair. Degenerate segments abort the scan with
/// GeomError; a shared vertex with two positions becomes an out1 entry.
template <class T>
CheckReport check_embedded(const Realization<T>& r, const CheckOptions& options = {});

/// Single-threaded reference scan; must agree with check_embedded exactly.
template <class T>
CheckReport check_embedded_serial(const Realization<T>& r, bool resolve_degenerate = false);

/// "The case of (edge {i,j}, face {k,l,m}) requires additional study"
std::vector<std::string> out1_lines(const CheckReport& report);

/// "The edge {i,j} intersects the face {k,l,m}"
std::vector<std::string> out2_lines(const CheckReport& report);

extern template CheckReport check_embedded(const ExactRealization&, const CheckOptions&);
extern template CheckReport check_embedded(const FloatRealization&, const CheckOptions&);
extern template CheckReport check_embedded_serial(const ExactRealization&, bool);
extern template CheckReport check_embedded_serial(const FloatRealization&, bool);

}  // namespace flexpoly
