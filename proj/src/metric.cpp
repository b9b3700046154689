#include "cyclespace/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cyclespace {

AreaBudget AreaBudget::pi_multiple(Rational q) {
    if (q.is_negative())
        throw std::domain_error("area budget must be non-negative");
    AreaBudget b;
    b.coeff_ = std::move(q);
    return b;
}

AreaBudget AreaBudget::unbounded() {
    AreaBudget b;
    b.finite_ = false;
    return b;
}

const Rational& AreaBudget::pi_coefficient() const {
    if (!finite_)
        throw std::logic_error("unbounded area budget has no coefficient");
    return coeff_;
}

AreaBudget& AreaBudget::operator+=(const AreaBudget& o) {
    if (!o.finite_)
        finite_ = false;
    if (finite_)
        coeff_ += o.coeff_;
    return *this;
}

bool AreaBudget::less_than_pi_multiple(const Rational& q) const {
    return finite_ && coeff_ < q;
}

bool operator==(const AreaBudget& a, const AreaBudget& b) {
    if (a.finite_ != b.finite_)
        return false;
    return !a.finite_ || a.coeff_ == b.coeff_;
}

bool operator<(const AreaBudget& a, const AreaBudget& b) {
    if (!a.finite_)
        return false;
    if (!b.finite_)
        return true;
    return a.coeff_ < b.coeff_;
}

std::string AreaBudget::to_string() const {
    if (!finite_)
        return "unbounded";
    return coeff_.to_string() + "·π";
}

double AreaBudget::approx() const {
    if (!finite_)
        return std::numeric_limits<double>::infinity();
    return coeff_.to_double() * std::numbers::pi;
}

AreaBudget disc_area_budget(std::span<const Rational> lengths) {
    Rational sum;
    for (const Rational& l : lengths) {
        if (l.is_negative())
            throw std::domain_error("disc budget: negative length " + l.to_string());
        sum += l * l;
    }
    return AreaBudget::pi_multiple(sum * Rational(1, 2));
}

AreaBudget d1_upper_bound(const WeightedMultigraph& g, const SpanningForest& f,
                          const HomologyClass& h) {
    std::vector<Rational> lengths;
    for (const HomologyClass& part : primitive_decompose(g, f, h))
        lengths.push_back(class_length(g, f, part));
    return disc_area_budget(lengths);
}

Rational squares_threshold(const Rational& total, const Rational& eps) {
    if (!total.is_positive() || !eps.is_positive())
        throw std::domain_error("squares_threshold requires positive inputs");
    return eps / total;
}

Rational cylinder_delta(const Rational& l, const Rational& eps) {
    if (!eps.is_positive())
        throw std::domain_error("cylinder_delta requires eps > 0");
    if (eps >= l)
        throw std::domain_error("cylinder_delta requires eps < l");
    return eps / (Rational(6) * l);
}

namespace {

/// Subpath lengths and their prefix sums for a subdivided closed walk.
struct SubdivisionLengths {
    std::vector<Rational> piece;
    std::vector<Rational> prefix;
    Rational total;
};

SubdivisionLengths measure(const WeightedMultigraph& g, const SubdividedPath& p) {
    validate_walk(g, p.walk);
    if (p.walk.steps.empty())
        throw std::invalid_argument("subdivided path must have at least one step");
    if (p.breakpoints.empty() || p.breakpoints.front() != 0)
        throw std::invalid_argument("breakpoints must start at 0");
    for (std::size_t i = 0; i + 1 < p.breakpoints.size(); ++i)
        if (p.breakpoints[i] >= p.breakpoints[i + 1])
            throw std::invalid_argument("breakpoints must be strictly increasing");
    if (p.breakpoints.back() >= p.walk.steps.size())
        throw std::invalid_argument("breakpoint beyond walk end");

    SubdivisionLengths out;
    std::size_t k = p.breakpoints.size();
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t from = p.breakpoints[i];
        std::size_t to = (i + 1 < k) ? p.breakpoints[i + 1] : p.walk.steps.size();
        Rational len;
        for (std::size_t s = from; s < to; ++s)
            len += g.edge(p.walk.steps[s].edge).length;
        out.piece.push_back(len);
        out.total += len;
        out.prefix.push_back(out.total);
    }
    return out;
}

/// Shortest path between two vertices, optionally with one edge removed.
std::optional<Rational> distance_avoiding(const WeightedMultigraph& g, std::size_t from,
                                          std::size_t to, std::optional<std::size_t> skip_edge) {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::optional<Rational>> dist(g.vertex_count());
    std::vector<bool> done(g.vertex_count(), false);
    dist[from] = Rational(0);
    for (;;) {
        std::size_t best = npos;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (done[v] || !dist[v])
                continue;
            if (best == npos || *dist[v] < *dist[best])
                best = v;
        }
        if (best == npos)
            break;
        done[best] = true;
        for (std::size_t eid : g.incident(best)) {
            if (skip_edge && eid == *skip_edge)
                continue;
            std::size_t w = g.other_end(eid, best);
            Rational cand = *dist[best] + g.edge(eid).length;
            if (!dist[w] || cand < *dist[w])
                dist[w] = cand;
        }
    }
    return dist[to];
}

} // namespace

bool delta_close_check(const WeightedMultigraph& g, const SubdividedPath& a,
                       const SubdividedPath& b, const Rational& delta,
                       const std::function<Rational(std::size_t, std::size_t)>& vertex_distance) {
    if (a.breakpoints.size() != b.breakpoints.size())
        throw std::invalid_argument("subdivision counts differ");
    if (!delta.is_positive())
        throw std::domain_error("delta must be positive");

    SubdivisionLengths la = measure(g, a);
    SubdivisionLengths lb = measure(g, b);
    std::size_t k = a.breakpoints.size();

    if ((la.total - lb.total).abs() >= delta)
        return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (la.piece[i] >= delta || lb.piece[i] >= delta)
            return false;
        if ((la.prefix[i] - lb.prefix[i]).abs() >= delta)
            return false;
    }
    Rational vertex_tol = delta / Rational(static_cast<long>(k));
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t pa = walk_vertex_at(g, a.walk, a.breakpoints[i]);
        std::size_t pb = walk_vertex_at(g, b.walk, b.breakpoints[i]);
        if (vertex_distance(pa, pb) >= vertex_tol)
            return false;
    }
    return true;
}

Rational circle_lower_bound(const Rational& circumference_pi_multiple) {
    if (!circumference_pi_multiple.is_positive())
        throw std::domain_error("circumference must be positive");
    Rational half = circumference_pi_multiple * Rational(1, 2);
    return half * half;
}

InvPiSquared circle_lower_bound_rational(const Rational& circumference) {
    if (!circumference.is_positive())
        throw std::domain_error("circumference must be positive");
    return {circumference * circumference * Rational(1, 4)};
}

std::optional<InvPiSquared> d1_lower_bound(const WeightedMultigraph& g, const SpanningForest& f,
                                           const HomologyClass& h) {
    if (!is_primitive(g, f, h))
        return std::nullopt;
    std::vector<CycleWithMultiplicity> cycles = flow_decompose(g, circulation_of(g, f, h));
    if (cycles.size() != 1 || cycles[0].multiplicity != 1)
        return std::nullopt;
    const ClosedWalk& cycle = cycles[0].cycle;

    // Isometric embedding: for every pair of cycle vertices the graph
    // distance equals the shorter arc between them.
    Rational total = walk_length(g, cycle);
    std::vector<std::size_t> verts;
    std::vector<Rational> at;  // arc position of each vertex from the start
    Rational pos;
    for (std::size_t i = 0; i < cycle.steps.size(); ++i) {
        verts.push_back(walk_vertex_at(g, cycle, i));
        at.push_back(pos);
        pos += g.edge(cycle.steps[i].edge).length;
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto dist = shortest_path_distances(g, verts[i]);
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            Rational arc = at[j] - at[i];
            Rational around = total - arc;
            Rational cycle_dist = arc < around ? arc : around;
            if (!dist[verts[j]] || *dist[verts[j]] != cycle_dist)
                return std::nullopt;
        }
    }
    return circle_lower_bound_rational(total);
}

void validate_sigma(const SigmaRepresentative& rep) {
    std::size_t last_trunc = 0;
    for (std::size_t i = 0; i < rep.items.size(); ++i) {
        const SigmaItem& item = rep.items[i];
        if (!item.length.is_positive())
            throw std::invalid_argument("sigma item " + std::to_string(i) + ": non-positive length");
        if (item.truncation < last_trunc)
            throw std::invalid_argument("sigma item " + std::to_string(i) +
                                        ": truncation index decreases");
        last_trunc = item.truncation;
    }
}

AreaBudget sigma_tail_bound(const SigmaRepresentative& rep, std::size_t n) {
    validate_sigma(rep);
    if (rep.tail_squares) {
        std::optional<Rational> sq = rep.tail_squares(n);
        if (!sq)
            return AreaBudget::unbounded();
        if (sq->is_negative())
            throw std::logic_error("tail_squares returned a negative sum");
        return AreaBudget::pi_multiple(*sq * Rational(1, 2));
    }
    if (n > rep.items.size())
        throw std::out_of_range("tail index beyond the stored prefix");
    Rational sq;
    for (std::size_t i = n; i < rep.items.size(); ++i)
        sq += rep.items[i].length * rep.items[i].length;
    return AreaBudget::pi_multiple(sq * Rational(1, 2));
}

bool cauchy_verify(const SigmaRepresentative& rep, std::span<const Rational> eps_schedule,
                   std::size_t max_prefix) {
    validate_sigma(rep);
    for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
        if (!eps_schedule[i].is_positive())
            throw std::invalid_argument("epsilon schedule must be positive");
        if (i > 0 && eps_schedule[i] >= eps_schedule[i - 1])
            throw std::invalid_argument("epsilon schedule must be decreasing");
    }
    std::size_t limit = rep.tail_squares ? std::max(max_prefix, rep.items.size())
                                         : rep.items.size();
    for (const Rational& eps : eps_schedule) {
        bool beaten = false;
        for (std::size_t n = 0; n <= limit; ++n) {
            if (sigma_tail_bound(rep, n).less_than_pi_multiple(eps)) {
                beaten = true;
                break;
            }
        }
        if (!beaten)
            return false;
    }
    return true;
}

FragmentabilityReport fragmentability_report(const WeightedMultigraph& g, const SpanningForest& f,
                                             const HomologyClass& h, const Rational& delta) {
    if (!delta.is_positive())
        throw std::domain_error("delta must be positive");

    FragmentabilityReport report;
    std::vector<HomologyClass> parts = primitive_decompose(g, f, h);
    report.fragmentable = true;
    for (const HomologyClass& part : parts)
        if (class_length(g, f, part) >= delta) {
            report.fragmentable = false;
            break;
        }
    if (report.fragmentable)
        report.witness = std::move(parts);

    if (!h.is_zero()) {
        // Shortest cycle through any chord carried by h: a floor under which
        // only the zero class is fragmentable.
        std::optional<Rational> girth;
        for (std::size_t i = 0; i < h.dimension(); ++i) {
            if (h.chord_flow[i] == 0)
                continue;
            std::size_t chord = f.chords()[i];
            const Edge& e = g.edge(chord);
            Rational cycle_len;
            if (e.tail == e.head) {
                cycle_len = e.length;
            } else {
                auto back = distance_avoiding(g, e.head, e.tail, chord);
                if (!back)
                    continue;  // chord is a bridge in g - e; no cycle through it
                cycle_len = e.length + *back;
            }
            if (!girth || cycle_len < *girth)
                girth = cycle_len;
        }
        report.support_girth = girth;
    }
    return report;
}

} // namespace cyclespace
