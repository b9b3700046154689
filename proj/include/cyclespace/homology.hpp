#ifndef CYCLESPACE_HOMOLOGY_HPP
#define CYCLESPACE_HOMOLOGY_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cyclespace/graph.hpp"

namespace cyclespace {

/**
 * Integer edge flow. flow[e] > 0 means net flow in the stored tail -> head
 * direction. A circulation additionally satisfies conservation (inflow =
 * outflow at every vertex; self-loops contribute zero net); operations that
 * require conservation check it and throw std::domain_error.
 */
struct Circulation {
    std::vector<std::int64_t> flow;

    explicit Circulation(std::size_t edge_count = 0) : flow(edge_count, 0) {}

    Circulation& operator+=(const Circulation& o);
    Circulation& operator-=(const Circulation& o);
    friend Circulation operator+(Circulation a, const Circulation& b) { return a += b; }
    friend Circulation operator-(Circulation a, const Circulation& b) { return a -= b; }
    Circulation operator-() const;
    bool is_zero() const;

    friend bool operator==(const Circulation&, const Circulation&) = default;
};

/**
 * Element of H1(G; Z) in the coordinates of a fixed spanning forest: one
 * integer per chord. Bijective with circulations (tree flows are forced by
 * conservation), so every length question is answered on the circulation.
 */
struct HomologyClass {
    std::vector<std::int64_t> chord_flow;

    explicit HomologyClass(std::size_t chord_count = 0) : chord_flow(chord_count, 0) {}

    std::size_t dimension() const { return chord_flow.size(); }
    bool is_zero() const;

    HomologyClass& operator+=(const HomologyClass& o);
    HomologyClass& operator-=(const HomologyClass& o);
    friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
    friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
    HomologyClass operator-() const;

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

/// Oriented simple cycle (or a single self-loop) with a positive multiplicity.
struct CycleWithMultiplicity {
    ClosedWalk cycle;
    std::int64_t multiplicity = 1;
};

bool is_conserved(const WeightedMultigraph& g, const Circulation& c);

/// Net signed traversal count per edge. Validates the walk.
Circulation walk_to_circulation(const WeightedMultigraph& g, const ClosedWalk& w);

/// Chord coordinates of a circulation. Throws std::domain_error if
/// conservation fails.
HomologyClass class_of(const WeightedMultigraph& g, const SpanningForest& f, const Circulation& c);

/// The unique circulation with the given chord coordinates; tree flows are
/// solved leaves-up along the forest.
Circulation circulation_of(const WeightedMultigraph& g, const SpanningForest& f,
                           const HomologyClass& h);

/// Sum over edges of |flow| * length, exact.
Rational circulation_length(const WeightedMultigraph& g, const Circulation& c);

/// Length of a class = length of its unique circulation.
Rational class_length(const WeightedMultigraph& g, const SpanningForest& f, const HomologyClass& h);

/**
 * Minimal-length representative of a class: the unique circulation with
 * those chord coordinates, and its length. No 1-chain (integer combination
 * of closed walks) in the class is shorter: a chain's length dominates the
 * flow-weighted length of its net circulation edge by edge, and
 * flow_decompose attains the bound.
 */
std::pair<Circulation, Rational> min_length_representative(const WeightedMultigraph& g,
                                                           const SpanningForest& f,
                                                           const HomologyClass& h);

/**
 * Splits a circulation into simple cycles with positive multiplicities, all
 * traversing edges in the sign of the flow, so that multiplicity-weighted
 * cycle lengths add exactly to the circulation length.
 *
 * Deterministic rule: start at the lowest-index edge with residual flow,
 * follow the flow direction exiting by the lowest-index outgoing edge with
 * residual, split off a cycle whenever a vertex repeats; a split consumes
 * the full residual multiplicity available along its edges.
 */
std::vector<CycleWithMultiplicity> flow_decompose(const WeightedMultigraph& g, const Circulation& c);

/**
 * Subclass order: d precedes c when l(c) = l(d) + l(c - d) exactly;
 * equivalently the flow of d lies between 0 and the flow of c on every edge.
 */
bool is_subclass(const WeightedMultigraph& g, const SpanningForest& f, const HomologyClass& d,
                 const HomologyClass& c);

/// Nonzero class whose only subclasses are 0 and itself; on a graph, exactly
/// the unit-flow simple cycles.
bool is_primitive(const WeightedMultigraph& g, const SpanningForest& f, const HomologyClass& h);

/**
 * Economical decomposition into primitive classes: each piece is a unit
 * simple cycle, the pieces sum to h, and their lengths add exactly to the
 * length of h. Multiplicity k cycles are split into k unit copies.
 */
std::vector<HomologyClass> primitive_decompose(const WeightedMultigraph& g, const SpanningForest& f,
                                               const HomologyClass& h);

/// True iff the parts sum to c and their lengths add exactly to l(c).
bool check_oplus(const WeightedMultigraph& g, const SpanningForest& f, const HomologyClass& c,
                 std::span<const HomologyClass> parts);

/// Unit circulation of an oriented cycle, scaled by the multiplicity.
Circulation cycle_circulation(const WeightedMultigraph& g, const CycleWithMultiplicity& cm);

} // namespace cyclespace

#endif
