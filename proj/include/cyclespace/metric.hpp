#ifndef CYCLESPACE_METRIC_HPP
#define CYCLESPACE_METRIC_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclespace/homology.hpp"

namespace cyclespace {

/**
 * Certified area value, carried as an exact rational multiple of pi so the
 * isoperimetric constant pi/2 never forces a float. The unbounded value
 * stands for a tail that does not vanish (e.g. a divergent length stream).
 */
class AreaBudget {
public:
    AreaBudget() : finite_(true), coeff_(0) {}

    /// Budget q * pi; throws std::domain_error if q < 0.
    static AreaBudget pi_multiple(Rational q);
    static AreaBudget unbounded();

    bool finite() const { return finite_; }
    /// Throws std::logic_error on the unbounded budget.
    const Rational& pi_coefficient() const;

    AreaBudget& operator+=(const AreaBudget& o);
    friend AreaBudget operator+(AreaBudget a, const AreaBudget& b) { return a += b; }

    /// Exact comparison with q * pi.
    bool less_than_pi_multiple(const Rational& q) const;

    friend bool operator==(const AreaBudget&, const AreaBudget&);
    friend bool operator<(const AreaBudget&, const AreaBudget&);

    std::string to_string() const;  // "q·π", or "unbounded"
    double approx() const;

private:
    bool finite_;
    Rational coeff_;
};

/// Sum of the per-circle disc fillings: (1/2) * sum of squared lengths, as a
/// pi-coefficient. Throws std::domain_error on a negative length.
AreaBudget disc_area_budget(std::span<const Rational> lengths);

/// Upper bound on d1(h, 0): disc budget over the primitive decomposition.
AreaBudget d1_upper_bound(const WeightedMultigraph& g, const SpanningForest& f,
                          const HomologyClass& h);

/**
 * The threshold r = eps / total: positive reals a_i < r summing to `total`
 * satisfy sum a_i^2 <= r * total = eps. Throws std::domain_error on
 * non-positive input.
 */
Rational squares_threshold(const Rational& total, const Rational& eps);

/**
 * Closeness threshold delta = eps / (6 l) for joining two closed curves of
 * length < l + eps by a cylinder of small area: the connecting circles c^i
 * satisfy length(c^i) < 4 delta and sum length(c^i) < 3 l, so the total
 * filling area is below (pi/2) * 4 delta * 3 l = 6 pi l delta = eps * pi.
 * `eps` is therefore read as a pi-coefficient. Requires 0 < eps < l.
 */
Rational cylinder_delta(const Rational& l, const Rational& eps);

/**
 * Closed walk with k ordered breakpoints (step indices, first = 0) cutting
 * it into subpaths sigma^1..sigma^k; subpath i spans steps
 * [breakpoints[i], breakpoints[i+1]).
 */
struct SubdividedPath {
    ClosedWalk walk;
    std::vector<std::size_t> breakpoints;
};

/**
 * Delta-closeness of two equally subdivided closed walks: total lengths
 * within delta, every subpath shorter than delta, every length prefix-sum
 * difference below delta, and corresponding breakpoint vertices within
 * delta/k under the supplied metric. All inequalities strict.
 */
bool delta_close_check(const WeightedMultigraph& g, const SubdividedPath& a,
                       const SubdividedPath& b, const Rational& delta,
                       const std::function<Rational(std::size_t, std::size_t)>& vertex_distance);

/**
 * Lower bound on d1((cycle class), 0) for an isometrically embedded circle,
 * by the quadratic scaling of 2-dimensional Hausdorff measure: a circle of
 * circumference 2*pi admits no filling of area below 1.
 *
 * Input is the circumference as a multiple of pi; the bound (q/2)^2 is then
 * a plain rational. For a rational circumference c use
 * circle_lower_bound_rational, whose bound c^2/4 carries a 1/pi^2 factor.
 */
Rational circle_lower_bound(const Rational& circumference_pi_multiple);

/// Value = coefficient / pi^2.
struct InvPiSquared {
    Rational coefficient;
};

InvPiSquared circle_lower_bound_rational(const Rational& circumference);

/**
 * Certified lower bound on d1(h, 0), available exactly when the class is a
 * unit simple cycle whose graph metric realizes the cycle metric (an
 * isometrically embedded circle). Returns nullopt otherwise - no guess is
 * emitted for classes outside the certified case.
 */
std::optional<InvPiSquared> d1_lower_bound(const WeightedMultigraph& g, const SpanningForest& f,
                                           const HomologyClass& h);

/// One member of a sigma-representative: an oriented cycle that exists from
/// truncation `truncation` of the exhaustion on, with its exact length.
struct SigmaItem {
    std::size_t truncation = 1;
    Rational length;
    CycleWithMultiplicity cycle;
};

/**
 * Sigma-representative: a finite prefix of a (possibly infinite) list of
 * cycles with summable lengths. For genuinely infinite
 * streams, `tail_squares` supplies the exact sum of squared lengths with
 * index > n over the entire stream (nullopt = divergent); when absent the
 * representative is the finite prefix itself.
 */
struct SigmaRepresentative {
    std::vector<SigmaItem> items;
    std::function<std::optional<Rational>(std::size_t)> tail_squares;
};

/// Throws std::invalid_argument on non-positive lengths or decreasing
/// truncation indices.
void validate_sigma(const SigmaRepresentative& rep);

/**
 * Disc-filling budget of the tail beyond index n (1-based): each remaining
 * cycle patched by its own disc. The partial sums are Cauchy when this
 * vanishes. Requires n <= items.size() for finite representatives.
 */
AreaBudget sigma_tail_bound(const SigmaRepresentative& rep, std::size_t n);

/**
 * True iff every epsilon in the (strictly positive, decreasing) schedule is
 * eventually beaten by some tail budget; epsilons are pi-coefficients,
 * compared exactly. `max_prefix` caps the search for streamed tails.
 */
bool cauchy_verify(const SigmaRepresentative& rep, std::span<const Rational> eps_schedule,
                   std::size_t max_prefix = 4096);

struct FragmentabilityReport {
    bool fragmentable = false;
    /// Certificate family (the primitive decomposition) when fragmentable.
    std::vector<HomologyClass> witness;
    /// For h != 0: shortest cycle length through any chord in the support;
    /// no nonzero class is fragmentable for delta at or below this.
    std::optional<Rational> support_girth;
};

/// Tests the delta-fragmentability certificate: all primitive pieces of h
/// shorter than delta. Requires delta > 0.
FragmentabilityReport fragmentability_report(const WeightedMultigraph& g, const SpanningForest& f,
                                             const HomologyClass& h, const Rational& delta);

} // namespace cyclespace

#endif
