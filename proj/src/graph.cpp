#include "cyclespace/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace cyclespace {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

WeightedMultigraph::WeightedMultigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incidence_(vertex_count) {
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        if (e.tail >= vertex_count_ || e.head >= vertex_count_)
            throw std::invalid_argument("edge " + std::to_string(id) + ": endpoint out of range (" +
                                        std::to_string(vertex_count_) + " vertices)");
        if (!e.length.is_positive())
            throw std::invalid_argument("edge " + std::to_string(id) + ": non-positive length " +
                                        e.length.to_string());
        incidence_[e.tail].push_back(id);
        if (e.head != e.tail)
            incidence_[e.head].push_back(id);
    }
    // Construction order is ascending, so the incidence lists already are.
}

std::size_t WeightedMultigraph::other_end(std::size_t edge_id, std::size_t vertex) const {
    const Edge& e = edges_.at(edge_id);
    if (e.tail == vertex)
        return e.head;
    if (e.head == vertex)
        return e.tail;
    throw std::invalid_argument("edge " + std::to_string(edge_id) + " not incident to vertex " +
                                std::to_string(vertex));
}

Rational WeightedMultigraph::total_length() const {
    Rational sum;
    for (const Edge& e : edges_)
        sum += e.length;
    return sum;
}

SpanningForest::SpanningForest(const WeightedMultigraph& g)
    : parent_edge_(g.vertex_count()),
      parent_vertex_(g.vertex_count()),
      tree_edge_(g.edge_count(), false),
      chord_position_(g.edge_count(), npos) {
    std::vector<bool> visited(g.vertex_count(), false);

    for (std::size_t root = 0; root < g.vertex_count(); ++root) {
        if (visited[root])
            continue;
        roots_.push_back(root);
        // Iterative DFS; the incidence lists are ascending by edge id, so the
        // lowest-index unexplored edge is taken first.
        std::vector<std::pair<std::size_t, std::size_t>> stack;  // (vertex, incidence cursor)
        visited[root] = true;
        preorder_.push_back(root);
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, cursor] = stack.back();
            const auto& inc = g.incident(v);
            if (cursor == inc.size()) {
                stack.pop_back();
                continue;
            }
            std::size_t eid = inc[cursor++];
            std::size_t w = g.other_end(eid, v);
            if (visited[w])
                continue;
            visited[w] = true;
            tree_edge_[eid] = true;
            parent_edge_[w] = eid;
            parent_vertex_[w] = v;
            preorder_.push_back(w);
            stack.emplace_back(w, 0);
        }
    }

    for (std::size_t id = 0; id < g.edge_count(); ++id) {
        if (!tree_edge_[id]) {
            chord_position_[id] = chords_.size();
            chords_.push_back(id);
        }
    }
}

std::size_t SpanningForest::chord_position(std::size_t edge_id) const {
    std::size_t pos = chord_position_.at(edge_id);
    if (pos == npos)
        throw std::invalid_argument("edge " + std::to_string(edge_id) + " is a tree edge, not a chord");
    return pos;
}

std::vector<std::size_t> SpanningForest::path_to_root(std::size_t vertex) const {
    std::vector<std::size_t> path;
    std::size_t v = vertex;
    while (auto pe = parent_edge_.at(v)) {
        path.push_back(*pe);
        v = *parent_vertex_[v];
    }
    return path;
}

void validate_walk(const WeightedMultigraph& g, const ClosedWalk& w) {
    if (w.start >= g.vertex_count())
        throw std::invalid_argument("walk start vertex out of range");
    std::size_t at = w.start;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        const WalkStep& s = w.steps[i];
        if (s.edge >= g.edge_count())
            throw std::invalid_argument("walk step " + std::to_string(i) + ": edge out of range");
        const Edge& e = g.edge(s.edge);
        std::size_t from = s.forward ? e.tail : e.head;
        std::size_t to = s.forward ? e.head : e.tail;
        if (from != at)
            throw std::invalid_argument("walk step " + std::to_string(i) + ": edge " +
                                        std::to_string(s.edge) + " does not start at vertex " +
                                        std::to_string(at));
        at = to;
    }
    if (at != w.start)
        throw std::invalid_argument("walk does not close at its start vertex");
}

Rational walk_length(const WeightedMultigraph& g, const ClosedWalk& w) {
    validate_walk(g, w);
    Rational sum;
    for (const WalkStep& s : w.steps)
        sum += g.edge(s.edge).length;
    return sum;
}

std::size_t walk_vertex_at(const WeightedMultigraph& g, const ClosedWalk& w, std::size_t k) {
    if (k > w.steps.size())
        throw std::out_of_range("walk position out of range");
    std::size_t at = w.start;
    for (std::size_t i = 0; i < k; ++i) {
        const WalkStep& s = w.steps[i];
        const Edge& e = g.edge(s.edge);
        at = s.forward ? e.head : e.tail;
    }
    return at;
}

WeightedMultigraph exhaustion_step(const Exhaustion& x, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("exhaustion index starts at 1");
    if (x.last && n > *x.last)
        throw std::out_of_range("exhaustion exhausted at n = " + std::to_string(*x.last));
    WeightedMultigraph gn = x.generator(n);
    if (x.last && n == *x.last)
        return gn;

    // Check the step embedding into G_{n+1}.
    WeightedMultigraph next = x.generator(n + 1);
    std::vector<std::size_t> emb;
    if (x.edge_embedding) {
        emb = x.edge_embedding(n);
    } else {
        emb.resize(gn.edge_count());
        for (std::size_t i = 0; i < emb.size(); ++i)
            emb[i] = i;
    }
    if (emb.size() != gn.edge_count())
        throw std::logic_error("exhaustion embedding has wrong size at n = " + std::to_string(n));
    std::vector<bool> used(next.edge_count(), false);
    for (std::size_t i = 0; i < emb.size(); ++i) {
        if (emb[i] >= next.edge_count() || used[emb[i]])
            throw std::logic_error("exhaustion embedding not injective at n = " + std::to_string(n));
        used[emb[i]] = true;
        const Edge& a = gn.edge(i);
        const Edge& b = next.edge(emb[i]);
        if (a.tail != b.tail || a.head != b.head || a.length != b.length)
            throw std::logic_error("exhaustion embedding does not preserve edge " + std::to_string(i) +
                                   " at n = " + std::to_string(n));
    }
    return gn;
}

std::vector<std::optional<Rational>> shortest_path_distances(const WeightedMultigraph& g,
                                                             std::size_t source) {
    if (source >= g.vertex_count())
        throw std::invalid_argument("source vertex out of range");
    std::vector<std::optional<Rational>> dist(g.vertex_count());
    std::vector<bool> done(g.vertex_count(), false);
    dist[source] = Rational(0);
    // Plain O(n^2 + nm) scan; exact comparisons, small graphs.
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
            std::size_t w = g.other_end(eid, best);
            Rational cand = *dist[best] + g.edge(eid).length;
            if (!dist[w] || cand < *dist[w])
                dist[w] = cand;
        }
    }
    return dist;
}

} // namespace cyclespace
