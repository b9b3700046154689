#ifndef CYCLESPACE_SPACES_HPP
#define CYCLESPACE_SPACES_HPP

#include <cstddef>
#include <vector>

#include "cyclespace/metric.hpp"

namespace cyclespace {

/**
 * Two unit triangles sharing a middle edge. The sum of the triangle classes
 * has a representative on the outer 4-cycle, shorter than the two triangles
 * together because it avoids the middle edge.
 */
struct OwlSpace {
    WeightedMultigraph graph;
    SpanningForest forest;
    ClosedWalk sigma_walk;   // left triangle u -> x -> v -> u
    ClosedWalk tau_walk;     // right triangle u -> v -> y -> u
    HomologyClass sigma;
    HomologyClass tau;
    std::size_t middle_edge; // shared by both triangles, cancels in sigma+tau
};

OwlSpace make_owl();

/**
 * Truncated one-way ladder with geometrically decaying lengths: rung j has
 * length 2^-j and the rails of square i have length 2^-(i+1), so square i
 * bounds a cycle of perimeter exactly 4 * 2^-i and the total length is
 * summable. The sigma-imitation walk winds every square once, runs to the
 * far end, returns, and traverses the outer boundary once in the opposite
 * orientation; its net circulation is zero.
 */
struct LadderSpace {
    WeightedMultigraph graph;
    SpanningForest forest;
    ClosedWalk sigma_imitation;
    std::vector<HomologyClass> square_classes;  // unit chord class per square
    std::vector<Rational> square_perimeters;    // 4 * 2^-i
};

LadderSpace make_ladder(std::size_t n);
Exhaustion ladder_exhaustion();

/**
 * Comb: a spine whose segment i has length 2^-i, a perpendicular unit tooth
 * at each attachment point, and a 4-gon circle of total length 2^-i at the
 * foot of tooth i. The circle cycles form a sigma-representative of total
 * length 1 - 2^-n, while any connected walk in the same class pays for every
 * tooth twice.
 */
struct CombSpace {
    WeightedMultigraph graph;
    SpanningForest forest;
    SigmaRepresentative sigma_rep;            // tau_1..tau_n
    ClosedWalk connected_walk;
    std::vector<HomologyClass> circle_classes;
};

CombSpace make_comb(std::size_t n);
Exhaustion comb_exhaustion();

/// The comb's sigma-representative as a stream: `prefix` stored circles plus
/// the exact geometric tail sum_{i>n} 4^-i = 4^-n / 3.
SigmaRepresentative comb_sigma_stream(std::size_t prefix);

/**
 * Finite stand-in for the topologist's-sine-curve comb: a path with a 4-gon
 * circle of length 2^-i attached at the i-th point. The circle classes form
 * a Cauchy sequence whose budgets vanish while each class keeps a positive
 * lower bound.
 */
struct SineCombSpace {
    WeightedMultigraph graph;
    SpanningForest forest;
    std::vector<HomologyClass> circle_classes;
    std::vector<Rational> circle_lengths;  // 2^-i
};

SineCombSpace make_sine_comb(std::size_t n);

/// k-gon discretization of a circle: k vertices, each edge total_length / k.
/// k = 1 yields a single self-loop.
WeightedMultigraph make_cycle(std::size_t k, const Rational& total_length);

} // namespace cyclespace

#endif
