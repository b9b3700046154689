#ifndef CYCLESPACE_Z2_HPP
#define CYCLESPACE_Z2_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclespace/graph.hpp"

namespace cyclespace {

/**
 * Dense GF(2) edge set over a fixed host graph: one bit per edge id.
 * Sum (^) is symmetric difference; bit-parallel over 64-bit blocks so the
 * rank computations stay cheap.
 */
class EdgeSetZ2 {
public:
    explicit EdgeSetZ2(std::size_t edge_count);
    static EdgeSetZ2 from_indices(std::size_t edge_count, std::span<const std::size_t> indices);

    std::size_t size() const { return size_; }  // host edge count
    bool test(std::size_t i) const;
    void set(std::size_t i, bool value = true);

    bool empty() const;
    std::size_t count() const;
    std::vector<std::size_t> indices() const;  // ascending
    /// Lowest set index; size() when empty.
    std::size_t lowest() const;

    bool intersects(const EdgeSetZ2& o) const;

    /// Throws std::invalid_argument on host (size) mismatch.
    EdgeSetZ2& operator^=(const EdgeSetZ2& o);
    friend EdgeSetZ2 operator^(EdgeSetZ2 a, const EdgeSetZ2& b) { return a ^= b; }

    friend bool operator==(const EdgeSetZ2&, const EdgeSetZ2&) = default;

private:
    std::size_t size_;
    std::vector<std::uint64_t> bits_;
};

/// True iff every vertex has even degree in the spanning subgraph z
/// (self-loops contribute 2). This is membership in the cycle space C(G).
bool in_cycle_space(const WeightedMultigraph& g, const EdgeSetZ2& z);

/// Chord plus the tree path between its endpoints; always a circuit.
/// Throws std::invalid_argument if `chord` is a tree edge.
EdgeSetZ2 fundamental_cycle(const WeightedMultigraph& g, const SpanningForest& f, std::size_t chord);

/// Chord-indexed coordinates of z: bit i = membership of chord i in z.
/// Requires in_cycle_space(z); throws std::domain_error otherwise.
std::vector<bool> z2_coordinates(const WeightedMultigraph& g, const SpanningForest& f,
                                 const EdgeSetZ2& z);

/// Sum of fundamental cycles over the set coordinate bits (the inverse of
/// z2_coordinates on cycle-space elements).
EdgeSetZ2 z2_reconstruct(const WeightedMultigraph& g, const SpanningForest& f,
                         const std::vector<bool>& coordinates);

/**
 * Splits a cycle-space element into pairwise edge-disjoint circuits
 * (connected, 2-regular subgraphs; a self-loop counts as a circuit).
 *
 * Deterministic rule: start a walk at the lowest-index remaining edge, exit
 * each vertex by the lowest-index unused incident edge, and split off a
 * circuit whenever a vertex repeats on the walk.
 *
 * Throws std::domain_error (naming an odd vertex) if z is not in the cycle
 * space.
 */
std::vector<EdgeSetZ2> decompose_edge_disjoint_circuits(const WeightedMultigraph& g,
                                                        const EdgeSetZ2& z);

struct TwoBasisReport {
    bool ok = false;
    std::string diagnostic;          // empty when ok
    std::size_t rank = 0;            // GF(2) rank of the candidate family
    std::size_t required_rank = 0;   // m - n + #components
};

/**
 * Verifies a candidate 2-basis of C(G): every member in the cycle space, the
 * family spans C(G) (rank = m - n + #components), and no edge occurs in more
 * than two members. The diagnostic names the first violated condition.
 */
TwoBasisReport verify_two_basis(const WeightedMultigraph& g, std::span<const EdgeSetZ2> basis);

/// GF(2) rank of an arbitrary family of edge sets (dense elimination).
std::size_t z2_rank(std::span<const EdgeSetZ2> sets);

/// Number of fundamental cycles (w.r.t. the forest) through each edge.
std::vector<std::size_t> fundamental_multiplicities(const WeightedMultigraph& g,
                                                    const SpanningForest& f);

/**
 * Rescales every edge lying on m >= 1 fundamental cycles to length/m, so the
 * fundamental-cycle lengths of the result sum to exactly the total original
 * length of the covered edges (each edge spreads its length across the
 * cycles using it). Bridges keep their length.
 */
WeightedMultigraph normalize_by_fundamental_multiplicity(const WeightedMultigraph& g,
                                                         const SpanningForest& f);

} // namespace cyclespace

#endif
