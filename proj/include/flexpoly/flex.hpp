#pragma once

// The flex {S_t}: v1..v4 stay fixed, v9 travels on the circle gamma where
// the radius-10 spheres about v3 and v4 meet, and v5..v8 follow by
// floating-point trilateration.

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flexpoly/checker.hpp"

namespace flexpoly::flex {

/// Radius of gamma, 3 sqrt(31) / 2. gamma lies in the plane x = 0 centered at the origin.
inline const double kGammaRadius = 1.5 * std::sqrt(31.0);

/// Largest t-step taken when marching v5..v8 from the t = 0 configuration.
inline constexpr double kMarchStep = 1e-3;

class FlexError : public std::runtime_error {
 public:
  enum class Kind { DiscriminantNegative, BracketInvalid, OutOfRange };

  FlexError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// (0, r sin t, -r cos t): positive t moves v9 toward positive y.
Point3d v9_of_t(double t);

struct FlexFrame {
  double t = 0;
  FloatRealization realization;
  std::map<VertexId, int> branch_record;  // trilateration candidate taken for v5..v8
};

/// S_t in float mode. Each of v5..v8 takes the trilateration candidate
/// nearest to its position in `previous`; without `previous` the frame is
/// reached by marching from the exact t = 0 branches in steps of at most
/// kMarchStep.
FlexFrame realize_flex(double t, double epsilon = kDefaultEpsilon, const FlexFrame* previous = nullptr);

/// max over edges of |edge length - table length|.
double max_edge_residual(const FlexFrame& frame);

struct ScanSample {
  double t = 0;
  std::optional<Verdict> verdict;  // empty when the frame could not be realized
  std::vector<IntersectionEntry> out2;
  std::size_t needs_study = 0;
  std::string error;
  friend bool operator==(const ScanSample&, const ScanSample&) = default;
};

/// steps + 1 evenly spaced samples from t_from to t_to, each checked in float
/// mode. Samples run on `workers` OpenMP threads (0: runtime default) and
/// are independent, so the result does not depend on the schedule.
std::vector<ScanSample> scan_embeddedness(double t_from, double t_to, int steps, double epsilon = kDefaultEpsilon,
                                          int workers = 0);

Verdict verdict_at(double t, double epsilon = kDefaultEpsilon);

struct Bracket {
  double embedded;      // S_t embedded here
  double not_embedded;  // and not (or inconclusive) here
  double width() const { return std::abs(not_embedded - embedded); }
};

/// Bisects the verdict change between an embedded parameter and a
/// non-embedded one down to `tolerance`. Throws BracketInvalid when the
/// endpoints do not have those verdicts.
Bracket max_embedded_t(double t_embedded, double t_not_embedded, double tolerance, double epsilon = kDefaultEpsilon);

/// Displacement of v9 over the parameter range [-t, t].
struct Sweep {
  double chord;  // |v9(t) - v9(-t)|
  double arc;    // length of gamma between them
};

Sweep sweep_of(double t);

}  // namespace flexpoly::flex
