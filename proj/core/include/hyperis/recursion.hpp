#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hyperis/interval.hpp"

namespace hyperis {

/// Parameters of the tree recursion z -> lambda ((beta z + 1)/(z + gamma))^d
/// governing Gibbs-measure ratios on the d-ary tree (d = Delta - 1).
/// Weights are exact rationals lifted to working precision at evaluation.
struct RecursionParams {
  mpq_class beta;
  mpq_class gamma;
  mpq_class lambda;
  long depth = 0;  // d

  /// The reduction's spin weights with recursion depth d.
  static RecursionParams paper(int k, int b, long depth);
};

/// One application of the recursion, at the precision of z. Requires z > 0
/// certified.
Interval tree_map(const Interval& z, const RecursionParams& p);

/// One-step fixed-point gap T(z) - z for the reduction's parameters,
/// computed both through tree_map and through the closed form
///   (2^b-1) (1 + 1/(2^(k-2b) z + 2^(k-2b) - 1))^d - z;
/// the two enclosures must intersect (checked) and their intersection is
/// returned.
Interval one_step_gap(const Interval& z, int k, int b, long depth);

/// Two-step gap T(T(z)) - z, same dual-route evaluation as one_step_gap.
Interval two_step_gap(const Interval& z, int k, int b, long depth);

enum class Regime { Unique, NonUnique, Undetermined };

struct CertifiedRoot {
  double value = 0;      // located to within the search tolerance
  double residual = 0;   // certified upper bound on |gap(value)|
};

enum class MapKind { OneStep, TwoStep };

/// Certified fixed-point structure of the recursion.
struct FixedPointReport {
  std::vector<CertifiedRoot> roots;  // ascending; roots of the requested map
  Regime regime = Regime::Undetermined;
  std::optional<double> q_minus;
  std::optional<double> q_times;
  std::optional<double> q_plus;
  unsigned precision_bits = 0;       // highest precision actually used
};

struct SearchOptions {
  double tol = 1e-12;           // bisection stops at bracket width <= tol
  double search_max = 0.0;      // 0 = derive lambda*T-bound automatically
  unsigned precision_bits = 256;
  unsigned max_precision_bits = 4096;
  int grid_points = 64;         // initial geometric grid
  int grid_refinements = 3;     // x4 points per refinement
  int k_cap = 16;               // precision-feasibility cap for scans
};

/// Locates all fixed points of the one- or two-step map on
/// (0, search_max] by a refining geometric grid of certified signs plus
/// bisection. The one-step map is strictly decreasing, so its gap has
/// exactly one root; the two-step gap has one or three, and the report's
/// regime reflects which (the middle two-step root must coincide with the
/// one-step root). Throws PrecisionExhausted when a sign cannot be
/// certified at max_precision_bits, BracketFailure when the grid limit is
/// reached with an inconsistent bracket structure.
FixedPointReport find_roots(MapKind which, int k, int b, long depth,
                            const SearchOptions& options = {});

/// find_roots at depth = delta - 1 (requires delta >= 3), with
/// precision-exhaustion and bracket failures reported as Undetermined
/// instead of thrown.
FixedPointReport classify(int k, int b, long delta,
                          const SearchOptions& options = {});

/// Certified signs of the two gaps at the probe point z = 5*2^b with
/// depth 5*2^(k-b): the regime is non-unique when the two-step gap is
/// positive there while the one-step gap is negative.
struct ProbeReport {
  long probe = 0;              // 5 * 2^b
  long depth = 0;              // 5 * 2^(k-b)
  double two_step_value = 0;   // midpoint of the certified enclosure
  double one_step_value = 0;
  bool pass = false;           // two-step > 0 and one-step < 0, certified
  unsigned precision_bits = 0;
};
ProbeReport certify_probe(int k, int b, const SearchOptions& options = {});

/// Closed-form lower bound (2^b-1) exp(5*2^b / (2 + (2^b-1) e)) - 5*2^b
/// for the two-step gap at the probe point when k = 2b; defined for b >= 2.
Interval probe_lower_bound(int b, mpfr_prec_t prec = 256);

/// Certifies exp(x) > (1 + x/y)^y > exp(xy/(x+y)) for x, y > 0, raising
/// precision until both strict inequalities are decided.
bool exp_sandwich_check(double x, double y, const SearchOptions& options = {});

struct ScanRow {
  int k = 0;
  int b = 0;
  long delta = 0;
  long d = 0;
  Regime regime = Regime::Undetermined;
  std::optional<double> q_minus;
  std::optional<double> q_times;
  std::optional<double> q_plus;
  long threshold_paper = 0;        // 5*2^(k-b) + 1
  double threshold_hypertree = 0;  // 2^k / (2k)
  unsigned precision_bits = 0;
};

/// classify over a (k, delta) rectangle at fixed b, with the two reference
/// degree thresholds attached to each row. Rows where certification fails
/// are marked Undetermined, never dropped. Requires k_max within the
/// options' k_cap and b <= k/2 for every scanned k.
std::vector<ScanRow> regime_scan(int k_min, int k_max, int b, long delta_min,
                                 long delta_max,
                                 const SearchOptions& options = {});

const char* to_string(Regime r);

}  // namespace hyperis
