#include "hyperis/recursion.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "hyperis/errors.hpp"
#include "hyperis/spin.hpp"

namespace hyperis {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Unique: return "Unique";
    case Regime::NonUnique: return "NonUnique";
    case Regime::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

RecursionParams RecursionParams::paper(int k, int b, long depth) {
  const SpinParams sp = paper_params(k, b);  // validates k, b
  if (depth < 0) {
    throw InvalidParameters("recursion: negative depth");
  }
  return RecursionParams{sp.beta, sp.gamma, sp.lambda, depth};
}

Interval tree_map(const Interval& z, const RecursionParams& p) {
  if (z.certified_sign() <= 0) {
    throw InvalidParameters("tree_map: z must be certified positive");
  }
  const mpfr_prec_t prec = z.precision();
  const Interval one = Interval::exact_int(1, prec);
  const Interval beta = Interval::exact_rational(p.beta, prec);
  const Interval gamma = Interval::exact_rational(p.gamma, prec);
  const Interval lambda = Interval::exact_rational(p.lambda, prec);
  const Interval ratio = (beta * z + one) / (z + gamma);
  return lambda * ratio.pow_ui(static_cast<unsigned long>(p.depth));
}

namespace {

// Closed form of T(z) for the reduction's weights, written over
// c = 2^(k-2b):  (2^b - 1) (1 + 1/(c z + c - 1))^d.
Interval closed_map(const Interval& z, int k, int b, long depth) {
  const mpfr_prec_t prec = z.precision();
  const Interval one = Interval::exact_int(1, prec);
  const Interval c =
      Interval::exact_rational(mpq_class(mpz_class(1) << (k - 2 * b)), prec);
  const Interval lambda = Interval::exact_rational(
      mpq_class((mpz_class(1) << b) - 1), prec);
  const Interval inner = one + one / (c * z + c - one);
  return lambda * inner.pow_ui(static_cast<unsigned long>(depth));
}

Interval dual_route(const Interval& via_tree_map, const Interval& via_closed,
                    const Interval& z) {
  // Both enclosures contain the same real number; a miss means a broken
  // evaluation path, not a precision problem.
  if (!via_tree_map.intersects(via_closed)) {
    throw std::logic_error("gap evaluation: dual routes disagree");
  }
  return via_tree_map.intersect(via_closed) - z;
}

}  // namespace

Interval one_step_gap(const Interval& z, int k, int b, long depth) {
  const RecursionParams p = RecursionParams::paper(k, b, depth);
  return dual_route(tree_map(z, p), closed_map(z, k, b, depth), z);
}

Interval two_step_gap(const Interval& z, int k, int b, long depth) {
  const RecursionParams p = RecursionParams::paper(k, b, depth);
  return dual_route(tree_map(tree_map(z, p), p),
                    closed_map(closed_map(z, k, b, depth), k, b, depth), z);
}

namespace {

// Minimal RAII scalar for search coordinates; evaluation precision is
// handled separately by the evaluator.
struct Scalar {
  mpfr_t v;

  explicit Scalar(mpfr_prec_t prec) {
    mpfr_init2(v, prec);
    mpfr_set_zero(v, 1);
  }
  Scalar(const Scalar& o) {
    mpfr_init2(v, mpfr_get_prec(o.v));
    mpfr_set(v, o.v, MPFR_RNDN);
  }
  Scalar(Scalar&& o) noexcept {
    mpfr_init2(v, mpfr_get_prec(o.v));
    mpfr_swap(v, o.v);
  }
  Scalar& operator=(const Scalar& o) {
    if (this != &o) {
      mpfr_set_prec(v, mpfr_get_prec(o.v));
      mpfr_set(v, o.v, MPFR_RNDN);
    }
    return *this;
  }
  Scalar& operator=(Scalar&& o) noexcept {
    if (this != &o) mpfr_swap(v, o.v);
    return *this;
  }
  ~Scalar() { mpfr_clear(v); }
};

class GapEvaluator {
 public:
  GapEvaluator(int k, int b, long depth, const SearchOptions& options)
      : k_(k), b_(b), depth_(depth), options_(options),
        used_bits_(options.precision_bits) {}

  Interval eval(MapKind which, const mpfr_t z, unsigned bits) const {
    const Interval iz = Interval::point(z, static_cast<mpfr_prec_t>(bits));
    return which == MapKind::OneStep ? one_step_gap(iz, k_, b_, depth_)
                                     : two_step_gap(iz, k_, b_, depth_);
  }

  // Certified sign with precision retry.
  int sign_at(MapKind which, const mpfr_t z) {
    for (unsigned bits = options_.precision_bits;
         bits <= options_.max_precision_bits; bits *= 2) {
      used_bits_ = std::max(used_bits_, bits);
      const int s = eval(which, z, bits).certified_sign();
      if (s != 0) return s;
    }
    throw PrecisionExhausted(
        "sign of the recursion gap not certified at " +
        std::to_string(options_.max_precision_bits) + " bits");
  }

  unsigned used_bits() const { return used_bits_; }

 private:
  int k_;
  int b_;
  long depth_;
  SearchOptions options_;
  unsigned used_bits_;
};

bool width_at_most(const mpfr_t lo, const mpfr_t hi, double tol) {
  mpfr_t w;
  mpfr_init2(w, mpfr_get_prec(lo));
  mpfr_sub(w, hi, lo, MPFR_RNDU);
  const bool ok = mpfr_cmp_d(w, tol) <= 0;
  mpfr_clear(w);
  return ok;
}

// Bisects a certified sign-change bracket down to width tol. The gap
// functions have no exactly-representable roots at depth >= 1, so every
// midpoint sign is certifiable given enough precision.
CertifiedRoot bisect_bracket(GapEvaluator& ev, MapKind which, const Scalar& lo,
                             const Scalar& hi, int sign_lo, double tol) {
  const mpfr_prec_t prec = mpfr_get_prec(lo.v);
  Scalar a(lo), b(hi), mid(prec);
  while (!width_at_most(a.v, b.v, tol)) {
    mpfr_add(mid.v, a.v, b.v, MPFR_RNDN);
    mpfr_div_2ui(mid.v, mid.v, 1, MPFR_RNDN);
    if (mpfr_cmp(mid.v, a.v) <= 0 || mpfr_cmp(mid.v, b.v) >= 0) {
      break;  // bracket at the resolution of the coordinate precision
    }
    if (ev.sign_at(which, mid.v) == sign_lo) {
      mpfr_swap(a.v, mid.v);
    } else {
      mpfr_swap(b.v, mid.v);
    }
  }
  mpfr_add(mid.v, a.v, b.v, MPFR_RNDN);
  mpfr_div_2ui(mid.v, mid.v, 1, MPFR_RNDN);

  CertifiedRoot root;
  root.value = mpfr_get_d(mid.v, MPFR_RNDN);
  // Residual is certified at the reported (double) location.
  Scalar at(prec);
  mpfr_set_d(at.v, root.value, MPFR_RNDN);
  const Interval residual = ev.eval(which, at.v, ev.used_bits());
  root.residual = std::max(std::fabs(residual.lower_double()),
                           std::fabs(residual.upper_double()));
  return root;
}

}  // namespace

FixedPointReport find_roots(MapKind which, int k, int b, long depth,
                            const SearchOptions& options) {
  const RecursionParams params = RecursionParams::paper(k, b, depth);
  if (options.tol <= 0) {
    throw InvalidParameters("find_roots: tol must be positive");
  }
  if (options.grid_points < 2 || options.precision_bits < 16 ||
      options.max_precision_bits < options.precision_bits) {
    throw InvalidParameters("find_roots: bad search options");
  }

  FixedPointReport report;
  report.precision_bits = options.precision_bits;

  const double lambda_value =
      std::ldexp(1.0, b) - 1.0;  // 2^b - 1, exact in double for b <= 52

  if (depth == 0) {
    // The map is constantly lambda; both maps have the single fixed point
    // lambda, exactly.
    report.roots = {CertifiedRoot{lambda_value, 0.0}};
    report.regime = Regime::Unique;
    report.q_times = lambda_value;
    return report;
  }

  // Coordinates carry enough bits to resolve tol regardless of how small
  // the evaluation precision starts.
  const mpfr_prec_t prec =
      std::max<mpfr_prec_t>(options.precision_bits, 128);
  GapEvaluator evaluator(k, b, depth, options);

  // Search interval [lambda, H]: every fixed point z of T or T∘T satisfies
  // z = T(w) for some w > lambda, and T is strictly decreasing with
  // T(w) > lambda, so lambda < z < T(lambda). H is T(lambda) nudged up
  // (or the caller's override).
  Scalar lo(prec), hi(prec);
  mpfr_set_q(lo.v, params.lambda.get_mpq_t(), MPFR_RNDD);
  if (options.search_max > 0) {
    mpfr_set_d(hi.v, options.search_max, MPFR_RNDU);
    if (mpfr_cmp(hi.v, lo.v) <= 0) {
      throw InvalidParameters("find_roots: search_max below lambda");
    }
  } else {
    const Interval at_lambda =
        tree_map(Interval::point(lo.v, prec), params);
    mpfr_set(hi.v, at_lambda.hi(), MPFR_RNDU);
    mpfr_mul_d(hi.v, hi.v, 1.0 + 0x1.0p-16, MPFR_RNDU);
  }

  if (evaluator.sign_at(MapKind::OneStep, lo.v) <= 0 ||
      evaluator.sign_at(MapKind::TwoStep, lo.v) <= 0) {
    throw BracketFailure("find_roots: gap not positive at the left endpoint");
  }
  if (evaluator.sign_at(MapKind::OneStep, hi.v) >= 0 ||
      evaluator.sign_at(MapKind::TwoStep, hi.v) >= 0) {
    throw BracketFailure(
        "find_roots: gap not negative at search_max; enlarge the interval");
  }

  // One-step root: the one-step map is strictly decreasing, so its gap has
  // a single crossing and plain bisection on [lambda, H] certifies it.
  const CertifiedRoot one_step_root =
      bisect_bracket(evaluator, MapKind::OneStep, lo, hi, +1, options.tol);

  // Two-step roots: certified signs on a refining geometric grid.
  std::vector<CertifiedRoot> two_step_roots;
  Scalar log_lo(prec), log_hi(prec);
  mpfr_log(log_lo.v, lo.v, MPFR_RNDN);
  mpfr_log(log_hi.v, hi.v, MPFR_RNDN);

  int points = options.grid_points;
  for (int refinement = 0;; ++refinement, points *= 4) {
    std::vector<Scalar> grid;
    grid.reserve(points + 1);
    std::vector<int> signs;
    signs.reserve(points + 1);
    Scalar t(prec), x(prec);
    for (int i = 0; i <= points; ++i) {
      if (i == 0) {
        mpfr_set(x.v, lo.v, MPFR_RNDN);
      } else if (i == points) {
        mpfr_set(x.v, hi.v, MPFR_RNDN);
      } else {
        mpfr_sub(t.v, log_hi.v, log_lo.v, MPFR_RNDN);
        mpfr_mul_si(t.v, t.v, i, MPFR_RNDN);
        mpfr_div_si(t.v, t.v, points, MPFR_RNDN);
        mpfr_add(t.v, t.v, log_lo.v, MPFR_RNDN);
        mpfr_exp(x.v, t.v, MPFR_RNDN);
      }
      if (!grid.empty() && mpfr_cmp(grid.back().v, x.v) >= 0) continue;
      grid.push_back(x);
      signs.push_back(evaluator.sign_at(MapKind::TwoStep, x.v));
    }

    std::vector<std::size_t> brackets;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      if (signs[i] != signs[i + 1]) brackets.push_back(i);
    }

    const bool last_refinement = refinement >= options.grid_refinements;
    if (brackets.size() == 3 || (brackets.size() == 1 && last_refinement)) {
      for (std::size_t i : brackets) {
        two_step_roots.push_back(bisect_bracket(evaluator, MapKind::TwoStep,
                                                grid[i], grid[i + 1], signs[i],
                                                options.tol));
      }
      break;
    }
    if (brackets.size() > 3) {
      throw BracketFailure("find_roots: more than three certified crossings");
    }
    if (last_refinement) {
      throw BracketFailure(
          "find_roots: inconsistent bracket structure at the grid limit");
    }
  }

  // The one-step fixed point is always a two-step fixed point; in the
  // three-root case it must be the middle one.
  const double coincidence_slack = 4 * options.tol;
  const double q_times_candidate =
      two_step_roots.size() == 3 ? two_step_roots[1].value
                                 : two_step_roots[0].value;
  if (std::fabs(q_times_candidate - one_step_root.value) > coincidence_slack) {
    throw BracketFailure(
        "find_roots: two-step root set does not contain the one-step root");
  }
  for (std::size_t i = 0; i + 1 < two_step_roots.size(); ++i) {
    if (two_step_roots[i + 1].value - two_step_roots[i].value <= options.tol) {
      throw BracketFailure("find_roots: roots closer than tol");
    }
  }

  if (two_step_roots.size() == 3) {
    report.regime = Regime::NonUnique;
    report.q_minus = two_step_roots[0].value;
    report.q_times = two_step_roots[1].value;
    report.q_plus = two_step_roots[2].value;
  } else {
    report.regime = Regime::Unique;
    report.q_times = two_step_roots[0].value;
  }
  report.roots = which == MapKind::TwoStep
                     ? std::move(two_step_roots)
                     : std::vector<CertifiedRoot>{one_step_root};
  report.precision_bits = evaluator.used_bits();
  return report;
}

FixedPointReport classify(int k, int b, long delta,
                          const SearchOptions& options) {
  if (delta < 3) {
    throw InvalidParameters("classify: requires delta >= 3");
  }
  try {
    return find_roots(MapKind::TwoStep, k, b, delta - 1, options);
  } catch (const PrecisionExhausted&) {
  } catch (const BracketFailure&) {
  }
  // Tangencies and uncertifiable signs land here: report Undetermined
  // rather than guessing a regime.
  FixedPointReport report;
  report.regime = Regime::Undetermined;
  report.precision_bits = options.max_precision_bits;
  return report;
}

ProbeReport certify_probe(int k, int b, const SearchOptions& options) {
  paper_params(k, b);  // validate
  if (k - b > 55 || b > 55) {
    throw InvalidParameters("certify_probe: k out of the supported range");
  }
  ProbeReport report;
  report.depth = 5L << (k - b);
  report.probe = 5L << b;

  for (unsigned bits = options.precision_bits;
       bits <= options.max_precision_bits; bits *= 2) {
    const Interval z =
        Interval::exact_int(report.probe, static_cast<mpfr_prec_t>(bits));
    const Interval two = two_step_gap(z, k, b, report.depth);
    const Interval one = one_step_gap(z, k, b, report.depth);
    const int sign_two = two.certified_sign();
    const int sign_one = one.certified_sign();
    if (sign_two != 0 && sign_one != 0) {
      report.two_step_value = two.midpoint_double();
      report.one_step_value = one.midpoint_double();
      report.pass = sign_two > 0 && sign_one < 0;
      report.precision_bits = bits;
      return report;
    }
  }
  throw PrecisionExhausted("certify_probe: signs not certified at " +
                           std::to_string(options.max_precision_bits) +
                           " bits");
}

Interval probe_lower_bound(int b, mpfr_prec_t prec) {
  if (b < 2) {
    throw InvalidParameters("probe_lower_bound: defined for b >= 2");
  }
  const Interval one = Interval::exact_int(1, prec);
  const Interval two = Interval::exact_int(2, prec);
  const Interval lambda =
      Interval::exact_rational(mpq_class((mpz_class(1) << b) - 1), prec);
  const Interval probe =
      Interval::exact_rational(mpq_class(5 * (mpz_class(1) << b)), prec);
  const Interval e = Interval::exp_of(one);
  return lambda * Interval::exp_of(probe / (two + lambda * e)) - probe;
}

bool exp_sandwich_check(double x, double y, const SearchOptions& options) {
  if (!(x > 0) || !(y > 0)) {
    throw InvalidParameters("exp_sandwich_check: requires x, y > 0");
  }
  for (unsigned bits = options.precision_bits;
       bits <= options.max_precision_bits; bits *= 2) {
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits);
    const Interval X = Interval::exact_double(x, prec);
    const Interval Y = Interval::exact_double(y, prec);
    const Interval one = Interval::exact_int(1, prec);
    const Interval upper = Interval::exp_of(X);
    const Interval middle = Interval::pow_monotone(one + X / Y, Y);
    const Interval lower = Interval::exp_of((X * Y) / (X + Y));
    if (middle.certainly_less(upper) && lower.certainly_less(middle)) {
      return true;
    }
    if (upper.certainly_less(middle) || middle.certainly_less(lower)) {
      return false;
    }
  }
  throw PrecisionExhausted("exp_sandwich_check: not certified at " +
                           std::to_string(options.max_precision_bits) +
                           " bits");
}

std::vector<ScanRow> regime_scan(int k_min, int k_max, int b, long delta_min,
                                 long delta_max,
                                 const SearchOptions& options) {
  std::vector<ScanRow> rows;
  if (k_min > k_max || delta_min > delta_max) return rows;
  if (k_max > options.k_cap) {
    throw InvalidParameters("regime_scan: k_max exceeds the precision cap of " +
                            std::to_string(options.k_cap));
  }
  if (b < 1 || k_min < 2 * b) {
    throw InvalidParameters("regime_scan: need 1 <= b <= k/2 for every k");
  }
  if (delta_min < 3) {
    throw InvalidParameters("regime_scan: requires delta >= 3");
  }

  for (int k = k_min; k <= k_max; ++k) {
    for (long delta = delta_min; delta <= delta_max; ++delta) {
      const FixedPointReport report = classify(k, b, delta, options);
      ScanRow row;
      row.k = k;
      row.b = b;
      row.delta = delta;
      row.d = delta - 1;
      row.regime = report.regime;
      row.q_minus = report.q_minus;
      row.q_times = report.q_times;
      row.q_plus = report.q_plus;
      row.threshold_paper = (5L << (k - b)) + 1;
      row.threshold_hypertree = std::ldexp(1.0, k) / (2.0 * k);
      row.precision_bits = report.precision_bits;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace hyperis
