#ifndef CYCLESPACE_GRAPH_HPP
#define CYCLESPACE_GRAPH_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cyclespace/rational.hpp"

namespace cyclespace {

struct Edge {
    std::size_t tail;
    std::size_t head;
    Rational length;
};

/**
 * Finite multigraph with strictly positive exact edge lengths.
 *
 * Parallel edges and self-loops are permitted. Edge ids are dense 0..m-1 in
 * construction order and stable for the lifetime of the graph. Immutable
 * after construction.
 */
class WeightedMultigraph {
public:
    /// Validates endpoints and lengths; throws std::invalid_argument naming
    /// the offending edge.
    WeightedMultigraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const Edge& edge(std::size_t id) const { return edges_.at(id); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Incident edge ids per vertex, ascending; a self-loop appears once.
    const std::vector<std::size_t>& incident(std::size_t vertex) const {
        return incidence_.at(vertex);
    }

    /// The endpoint of `edge_id` opposite to `vertex` (== vertex for loops).
    std::size_t other_end(std::size_t edge_id, std::size_t vertex) const;

    bool is_loop(std::size_t edge_id) const {
        const Edge& e = edges_[edge_id];
        return e.tail == e.head;
    }

    Rational total_length() const;

private:
    std::size_t vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
};

/**
 * Deterministic depth-first spanning forest: one tree per connected
 * component, root = lowest vertex index in the component, neighbors explored
 * in ascending edge id. Non-tree edges (including every self-loop and the
 * extra copies of parallel edges) are the chords; homology coordinates are
 * indexed by them.
 */
class SpanningForest {
public:
    explicit SpanningForest(const WeightedMultigraph& g);

    std::size_t vertex_count() const { return parent_vertex_.size(); }
    std::size_t component_count() const { return roots_.size(); }
    const std::vector<std::size_t>& roots() const { return roots_; }

    bool is_tree_edge(std::size_t edge_id) const { return tree_edge_.at(edge_id); }
    /// Chord edge ids in ascending order; |chords| = m - n + #components.
    const std::vector<std::size_t>& chords() const { return chords_; }
    /// Position of a chord in chords(); throws std::invalid_argument on a tree edge.
    std::size_t chord_position(std::size_t edge_id) const;

    /// Tree edge from `vertex` to its parent; nullopt at roots.
    std::optional<std::size_t> parent_edge(std::size_t vertex) const {
        return parent_edge_.at(vertex);
    }
    std::optional<std::size_t> parent_vertex(std::size_t vertex) const {
        return parent_vertex_.at(vertex);
    }

    /// DFS preorder over all components (parents precede children).
    const std::vector<std::size_t>& preorder() const { return preorder_; }

    /// Tree-edge ids on the path from `vertex` up to its component root.
    std::vector<std::size_t> path_to_root(std::size_t vertex) const;

private:
    std::vector<std::optional<std::size_t>> parent_edge_;
    std::vector<std::optional<std::size_t>> parent_vertex_;
    std::vector<bool> tree_edge_;
    std::vector<std::size_t> chords_;
    std::vector<std::size_t> chord_position_;  // per edge; npos for tree edges
    std::vector<std::size_t> roots_;
    std::vector<std::size_t> preorder_;
};

inline SpanningForest spanning_forest(const WeightedMultigraph& g) {
    return SpanningForest(g);
}

/// One traversal step: edge `edge`, forward = tail -> head.
struct WalkStep {
    std::size_t edge;
    bool forward;

    friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

/// Closed edge walk: starts and ends at `start`. May be empty (the trivial
/// walk at a vertex). Validity against a graph is checked by the operations.
struct ClosedWalk {
    std::size_t start = 0;
    std::vector<WalkStep> steps;

    friend bool operator==(const ClosedWalk&, const ClosedWalk&) = default;
};

/// Throws std::invalid_argument if a step does not chain or the walk fails
/// to close at its start vertex.
void validate_walk(const WeightedMultigraph& g, const ClosedWalk& w);

/// Sum of traversed edge lengths, counting multiplicity.
Rational walk_length(const WeightedMultigraph& g, const ClosedWalk& w);

/// Vertex reached after the first `k` steps of the walk.
std::size_t walk_vertex_at(const WeightedMultigraph& g, const ClosedWalk& w, std::size_t k);

/**
 * Nested family of finite graphs G_1 <= G_2 <= ..., the finite stand-in for
 * an infinite graph. `generator(n)` must be pure; `edge_embedding(n)` maps
 * edge ids of G_n into G_{n+1} and must preserve endpoints and lengths
 * (the built-in generators embed G_n as a prefix of G_{n+1}, so the default
 * identity embedding applies).
 */
struct Exhaustion {
    std::function<WeightedMultigraph(std::size_t)> generator;
    std::function<std::vector<std::size_t>(std::size_t)> edge_embedding;  // may be null: identity
    std::optional<std::size_t> last;  // for finite families

    /// The vertex embedding is the identity for prefix-stable generators.
};

/// Returns G_n (n >= 1) and checks the embedding G_n -> G_{n+1} preserves
/// endpoints and lengths. Throws std::out_of_range past a finite family's end.
WeightedMultigraph exhaustion_step(const Exhaustion& x, std::size_t n);

/// Exact single-source shortest-path distances (Dijkstra); nullopt where
/// unreachable.
std::vector<std::optional<Rational>> shortest_path_distances(const WeightedMultigraph& g,
                                                             std::size_t source);

} // namespace cyclespace

#endif
