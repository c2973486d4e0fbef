#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "cffwb/combinatorics.hpp"
#include "cffwb/constructions.hpp"

namespace cffwb {

enum class Tier { Exact, CertifiedLower, CertifiedUpper, Heuristic };

std::string tier_name(Tier tier);

struct BoundEntry {
  std::string name;
  Tier tier = Tier::Heuristic;
  bool applicable = false;
  std::variant<Count, Ratio, double> value;  // meaningful when applicable
  std::string note;
};

/// Per-bound values for one (r, w; d), t instance.  Heuristic entries never
/// feed best_certified_lower.
struct BoundReport {
  int r = 0, w = 0, d = 1, t = 0;
  std::optional<double> c;
  std::vector<BoundEntry> entries;
  std::optional<Count> exact;
  std::optional<Count> best_certified_lower;
  std::optional<Count> best_upper;
};

enum class DensityVariant {
  Rcff,             // c r^2 / log r * log t            (w = 1, r >= 2)
  Stinson1,         // 2c C(r+w,r)/log(r+w) * log t
  Stinson2,         // 0.7c (r+w) C(r+w,r)/log C(r+w,r) * log t, large t only
  Estimate,         // c (C(r+w,w+1)+C(r+w-1,w+1)+3C(r+w-4,w-2))/log r * log(t-w+1)
  EngelAsymptotic,  // (1-eps) (r+w-2)^(r+w-2)/((w-1)^(w-1)(r-1)^(r-1)) R(t-r-w+2)
  Erdos12,          // log t / log 1.25                 ({r,w} = {1,2})
};

struct DensityResult {
  bool applicable = false;
  double value = 0.0;
  std::string note;
};

struct EngelFractional {
  Ratio raw;    // min-ratio times R, before rounding
  Count value;  // ceiling, the usable integer bound
};

enum class EngelbKind { Lattice, Symmetric };

/// Memoizing evaluator for every bound on N((r,w;d),t).
class BoundEngine {
 public:
  /// C(r+w-1, r) * R(t - r - w + 2); d = 1 only.
  Count engel_lower(int r, int w, int t);

  /// Heuristic density bounds; logs base 2.  Inapplicable parameter ranges
  /// return applicable = false rather than a value.
  DensityResult density_lower(DensityVariant variant, int r, int w, int t,
                              double c, double epsilon = 0.1);

  /// ceil(d * bc*(I_t(r,w))).
  Count fractional_lower(int r, int w, int d, int t);

  /// ceil( min_{w-1 <= m <= t-r+1} C(t,m)/C(t-r-w+2, m-w+1) * R(t-r-w+2) );
  /// d = 1 only.
  EngelFractional engel_fractional_lower(int r, int w, int t);

  /// bc*(I_t(r,w)) * (1 + ln C(t-w, r)); d = 1 only.
  double lovasz_upper(int r, int w, int t);

  /// Sum over the family of certified lower bounds on the reduced instances;
  /// throws inapplicable_error when the family fails its preconditions.
  Count setpairs_lower(int r, int w, int d, int t, const SetPairFamily& f);

  /// Both sums of the s-subset recursion, maximized.
  Count recursive_lower(int r, int w, int d, int t, int s);

  /// Lattice-path / symmetric cross-intersecting family bounds.
  Count engelb_lower(int r, int w, int d, int t, EngelbKind kind);

  /// Catalogued exact values; absence is a value.
  std::optional<Count> exact_value(int r, int w, int d, int t);

  /// Best certified lower bound, memoized over (r, w, d, t); conventions
  /// N((r,0;d),t) = N((0,w;d),t) = 1.
  Count certified_lower(int r, int w, int d, int t);

  /// Full report; caps r + w <= 12, t <= 60.
  BoundReport best_bounds(int r, int w, int d, int t,
                          std::optional<double> c = std::nullopt);

 private:
  std::map<std::tuple<int, int, int, int>, Count> memo_;
};

/// Structured key-value serialization of a report.
std::string emit_report(const BoundReport& report);
/// Human-readable table with tier labels.
std::string format_report(const BoundReport& report);

}  // namespace cffwb
