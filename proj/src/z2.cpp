#include "cyclespace/z2.hpp"

#include <bit>
#include <stdexcept>

namespace cyclespace {

EdgeSetZ2::EdgeSetZ2(std::size_t edge_count)
    : size_(edge_count), bits_((edge_count + 63) / 64, 0) {}

EdgeSetZ2 EdgeSetZ2::from_indices(std::size_t edge_count, std::span<const std::size_t> indices) {
    EdgeSetZ2 z(edge_count);
    for (std::size_t i : indices)
        z.set(i);
    return z;
}

bool EdgeSetZ2::test(std::size_t i) const {
    if (i >= size_)
        throw std::out_of_range("EdgeSetZ2: index out of range");
    return (bits_[i / 64] >> (i % 64)) & 1u;
}

void EdgeSetZ2::set(std::size_t i, bool value) {
    if (i >= size_)
        throw std::out_of_range("EdgeSetZ2: index out of range");
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
        bits_[i / 64] |= mask;
    else
        bits_[i / 64] &= ~mask;
}

bool EdgeSetZ2::empty() const {
    for (std::uint64_t b : bits_)
        if (b)
            return false;
    return true;
}

std::size_t EdgeSetZ2::count() const {
    std::size_t c = 0;
    for (std::uint64_t b : bits_)
        c += static_cast<std::size_t>(std::popcount(b));
    return c;
}

std::vector<std::size_t> EdgeSetZ2::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i)
        if (test(i))
            out.push_back(i);
    return out;
}

std::size_t EdgeSetZ2::lowest() const {
    for (std::size_t blk = 0; blk < bits_.size(); ++blk)
        if (bits_[blk])
            return blk * 64 + static_cast<std::size_t>(std::countr_zero(bits_[blk]));
    return size_;
}

bool EdgeSetZ2::intersects(const EdgeSetZ2& o) const {
    if (o.size_ != size_)
        throw std::invalid_argument("EdgeSetZ2: host graph mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & o.bits_[i])
            return true;
    return false;
}

EdgeSetZ2& EdgeSetZ2::operator^=(const EdgeSetZ2& o) {
    if (o.size_ != size_)
        throw std::invalid_argument("EdgeSetZ2: host graph mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i)
        bits_[i] ^= o.bits_[i];
    return *this;
}

namespace {

void require_host(const WeightedMultigraph& g, const EdgeSetZ2& z) {
    if (z.size() != g.edge_count())
        throw std::invalid_argument("EdgeSetZ2: host graph mismatch");
}

/// First vertex of odd degree in z, or vertex_count() if none.
std::size_t first_odd_vertex(const WeightedMultigraph& g, const EdgeSetZ2& z) {
    std::vector<std::size_t> degree(g.vertex_count(), 0);
    for (std::size_t id = 0; id < g.edge_count(); ++id) {
        if (!z.test(id))
            continue;
        const Edge& e = g.edge(id);
        degree[e.tail] += 1;
        degree[e.head] += 1;  // a loop contributes 2 at its vertex
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (degree[v] % 2)
            return v;
    return g.vertex_count();
}

} // namespace

bool in_cycle_space(const WeightedMultigraph& g, const EdgeSetZ2& z) {
    require_host(g, z);
    return first_odd_vertex(g, z) == g.vertex_count();
}

EdgeSetZ2 fundamental_cycle(const WeightedMultigraph& g, const SpanningForest& f, std::size_t chord) {
    if (chord >= g.edge_count())
        throw std::invalid_argument("chord edge id out of range");
    f.chord_position(chord);  // throws on tree edges
    EdgeSetZ2 z(g.edge_count());
    z.set(chord);
    // Tree paths to the roots cancel above the meeting point over GF(2).
    for (std::size_t eid : f.path_to_root(g.edge(chord).tail))
        z.set(eid, !z.test(eid));
    for (std::size_t eid : f.path_to_root(g.edge(chord).head))
        z.set(eid, !z.test(eid));
    return z;
}

std::vector<bool> z2_coordinates(const WeightedMultigraph& g, const SpanningForest& f,
                                 const EdgeSetZ2& z) {
    require_host(g, z);
    std::size_t odd = first_odd_vertex(g, z);
    if (odd != g.vertex_count())
        throw std::domain_error("edge set not in cycle space: odd degree at vertex " +
                                std::to_string(odd));
    const auto& chords = f.chords();
    std::vector<bool> coords(chords.size(), false);
    for (std::size_t i = 0; i < chords.size(); ++i)
        coords[i] = z.test(chords[i]);
    return coords;
}

EdgeSetZ2 z2_reconstruct(const WeightedMultigraph& g, const SpanningForest& f,
                         const std::vector<bool>& coordinates) {
    if (coordinates.size() != f.chords().size())
        throw std::invalid_argument("coordinate vector has wrong dimension");
    EdgeSetZ2 z(g.edge_count());
    for (std::size_t i = 0; i < coordinates.size(); ++i)
        if (coordinates[i])
            z ^= fundamental_cycle(g, f, f.chords()[i]);
    return z;
}

std::vector<EdgeSetZ2> decompose_edge_disjoint_circuits(const WeightedMultigraph& g,
                                                        const EdgeSetZ2& z) {
    require_host(g, z);
    std::size_t odd = first_odd_vertex(g, z);
    if (odd != g.vertex_count())
        throw std::domain_error("edge set not in cycle space: odd degree at vertex " +
                                std::to_string(odd));

    std::vector<EdgeSetZ2> circuits;
    EdgeSetZ2 remaining = z;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> stack_pos(g.vertex_count(), none);

    auto lowest_exit = [&](std::size_t v) -> std::size_t {
        for (std::size_t eid : g.incident(v))
            if (remaining.test(eid))
                return eid;
        return none;
    };

    while (!remaining.empty()) {
        std::size_t e0 = remaining.lowest();
        std::vector<std::size_t> verts{g.edge(e0).tail};
        std::vector<std::size_t> path_edges;
        stack_pos[verts[0]] = 0;

        std::size_t current = verts[0];
        std::size_t next_edge = e0;
        for (;;) {
            remaining.set(next_edge, false);
            current = g.other_end(next_edge, current);
            path_edges.push_back(next_edge);
            verts.push_back(current);

            if (stack_pos[current] != none) {
                // Vertex repeats: the walk segment since its first visit is a circuit.
                std::size_t at = stack_pos[current];
                EdgeSetZ2 circuit(g.edge_count());
                for (std::size_t i = at; i < path_edges.size(); ++i)
                    circuit.set(path_edges[i]);
                circuits.push_back(circuit);
                for (std::size_t i = at + 1; i < verts.size() - 1; ++i)
                    stack_pos[verts[i]] = none;
                verts.resize(at + 1);
                path_edges.resize(at);
                if (path_edges.empty()) {
                    stack_pos[current] = none;
                    break;  // walk collapsed; pick the next lowest edge afresh
                }
            } else {
                stack_pos[current] = verts.size() - 1;
            }

            next_edge = lowest_exit(current);
            // While the walk is open the current vertex has odd remaining
            // degree, so an exit always exists.
            if (next_edge == none)
                throw std::logic_error("circuit walk stuck with edges remaining");
        }
    }
    return circuits;
}

std::size_t z2_rank(std::span<const EdgeSetZ2> sets) {
    std::vector<EdgeSetZ2> rows(sets.begin(), sets.end());
    std::size_t rank = 0;
    std::size_t m = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < m && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].test(col))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].test(col))
                rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> fundamental_multiplicities(const WeightedMultigraph& g,
                                                    const SpanningForest& f) {
    std::vector<std::size_t> mult(g.edge_count(), 0);
    for (std::size_t chord : f.chords())
        for (std::size_t id : fundamental_cycle(g, f, chord).indices())
            mult[id] += 1;
    return mult;
}

WeightedMultigraph normalize_by_fundamental_multiplicity(const WeightedMultigraph& g,
                                                         const SpanningForest& f) {
    std::vector<std::size_t> mult = fundamental_multiplicities(g, f);
    std::vector<Edge> edges = g.edges();
    for (std::size_t id = 0; id < edges.size(); ++id)
        if (mult[id] > 1)
            edges[id].length /= Rational(static_cast<long>(mult[id]));
    return WeightedMultigraph(g.vertex_count(), std::move(edges));
}

TwoBasisReport verify_two_basis(const WeightedMultigraph& g, std::span<const EdgeSetZ2> basis) {
    TwoBasisReport report;
    SpanningForest f(g);
    report.required_rank = f.chords().size();

    for (std::size_t i = 0; i < basis.size(); ++i) {
        require_host(g, basis[i]);
        if (!in_cycle_space(g, basis[i])) {
            report.diagnostic = "member " + std::to_string(i) + " not in cycle space";
            return report;
        }
    }
    report.rank = z2_rank(basis);
    if (report.rank != report.required_rank) {
        report.diagnostic = "does not span (rank " + std::to_string(report.rank) + " < " +
                            std::to_string(report.required_rank) + ")";
        return report;
    }
    for (std::size_t id = 0; id < g.edge_count(); ++id) {
        std::size_t uses = 0;
        for (const EdgeSetZ2& b : basis)
            uses += b.test(id) ? 1 : 0;
        if (uses > 2) {
            report.diagnostic = "edge " + std::to_string(id) + " in " + std::to_string(uses) +
                                " members";
            return report;
        }
    }
    report.ok = true;
    return report;
}

} // namespace cyclespace
