#include "cyclespace/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclespace {

namespace {

constexpr std::size_t none = static_cast<std::size_t>(-1);

void require_same_size(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch");
}

void require_conserved(const WeightedMultigraph& g, const Circulation& c) {
    if (c.flow.size() != g.edge_count())
        throw std::invalid_argument("circulation has wrong edge count");
    if (!is_conserved(g, c))
        throw std::domain_error("flow violates conservation");
}

} // namespace

Circulation& Circulation::operator+=(const Circulation& o) {
    require_same_size(flow, o.flow);
    for (std::size_t i = 0; i < flow.size(); ++i)
        flow[i] += o.flow[i];
    return *this;
}

Circulation& Circulation::operator-=(const Circulation& o) {
    require_same_size(flow, o.flow);
    for (std::size_t i = 0; i < flow.size(); ++i)
        flow[i] -= o.flow[i];
    return *this;
}

Circulation Circulation::operator-() const {
    Circulation r(flow.size());
    for (std::size_t i = 0; i < flow.size(); ++i)
        r.flow[i] = -flow[i];
    return r;
}

bool Circulation::is_zero() const {
    return std::all_of(flow.begin(), flow.end(), [](std::int64_t v) { return v == 0; });
}

bool HomologyClass::is_zero() const {
    return std::all_of(chord_flow.begin(), chord_flow.end(), [](std::int64_t v) { return v == 0; });
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& o) {
    require_same_size(chord_flow, o.chord_flow);
    for (std::size_t i = 0; i < chord_flow.size(); ++i)
        chord_flow[i] += o.chord_flow[i];
    return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& o) {
    require_same_size(chord_flow, o.chord_flow);
    for (std::size_t i = 0; i < chord_flow.size(); ++i)
        chord_flow[i] -= o.chord_flow[i];
    return *this;
}

HomologyClass HomologyClass::operator-() const {
    HomologyClass r(chord_flow.size());
    for (std::size_t i = 0; i < chord_flow.size(); ++i)
        r.chord_flow[i] = -chord_flow[i];
    return r;
}

bool is_conserved(const WeightedMultigraph& g, const Circulation& c) {
    if (c.flow.size() != g.edge_count())
        throw std::invalid_argument("circulation has wrong edge count");
    std::vector<std::int64_t> net(g.vertex_count(), 0);
    for (std::size_t id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (e.tail == e.head)
            continue;
        net[e.tail] -= c.flow[id];
        net[e.head] += c.flow[id];
    }
    return std::all_of(net.begin(), net.end(), [](std::int64_t v) { return v == 0; });
}

Circulation walk_to_circulation(const WeightedMultigraph& g, const ClosedWalk& w) {
    validate_walk(g, w);
    Circulation c(g.edge_count());
    for (const WalkStep& s : w.steps)
        c.flow[s.edge] += s.forward ? 1 : -1;
    return c;
}

HomologyClass class_of(const WeightedMultigraph& g, const SpanningForest& f, const Circulation& c) {
    require_conserved(g, c);
    const auto& chords = f.chords();
    HomologyClass h(chords.size());
    for (std::size_t i = 0; i < chords.size(); ++i)
        h.chord_flow[i] = c.flow[chords[i]];
    return h;
}

Circulation circulation_of(const WeightedMultigraph& g, const SpanningForest& f,
                           const HomologyClass& h) {
    if (h.dimension() != f.chords().size())
        throw std::invalid_argument("class dimension does not match forest chord count");
    Circulation c(g.edge_count());
    for (std::size_t i = 0; i < f.chords().size(); ++i)
        c.flow[f.chords()[i]] = h.chord_flow[i];

    // Net inflow per vertex from the chords; tree edges must cancel it.
    std::vector<std::int64_t> net(g.vertex_count(), 0);
    for (std::size_t id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (f.is_tree_edge(id) || e.tail == e.head)
            continue;
        net[e.tail] -= c.flow[id];
        net[e.head] += c.flow[id];
    }
    // Children before parents: reverse DFS preorder.
    const auto& order = f.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t v = *it;
        auto pe = f.parent_edge(v);
        if (!pe)
            continue;  // roots balance automatically
        const Edge& e = g.edge(*pe);
        // Choose the tree flow that zeroes the imbalance at v.
        std::int64_t flow = (e.head == v) ? -net[v] : net[v];
        c.flow[*pe] = flow;
        net[e.tail] -= flow;
        net[e.head] += flow;
    }
    return c;
}

Rational circulation_length(const WeightedMultigraph& g, const Circulation& c) {
    if (c.flow.size() != g.edge_count())
        throw std::invalid_argument("circulation has wrong edge count");
    Rational sum;
    for (std::size_t id = 0; id < g.edge_count(); ++id)
        if (c.flow[id] != 0)
            sum += scale(c.flow[id], g.edge(id).length);
    return sum;
}

Rational class_length(const WeightedMultigraph& g, const SpanningForest& f, const HomologyClass& h) {
    return circulation_length(g, circulation_of(g, f, h));
}

std::pair<Circulation, Rational> min_length_representative(const WeightedMultigraph& g,
                                                           const SpanningForest& f,
                                                           const HomologyClass& h) {
    Circulation c = circulation_of(g, f, h);
    Rational len = circulation_length(g, c);
    return {std::move(c), std::move(len)};
}

std::vector<CycleWithMultiplicity> flow_decompose(const WeightedMultigraph& g, const Circulation& c) {
    require_conserved(g, c);
    std::vector<std::int64_t> residual = c.flow;
    std::vector<CycleWithMultiplicity> cycles;
    std::vector<std::size_t> stack_pos(g.vertex_count(), none);

    auto lowest_with_residual = [&]() -> std::size_t {
        for (std::size_t id = 0; id < residual.size(); ++id)
            if (residual[id] != 0)
                return id;
        return none;
    };
    // Lowest-index edge leaving v in its flow direction.
    auto lowest_outgoing = [&](std::size_t v) -> std::size_t {
        for (std::size_t eid : g.incident(v)) {
            if (residual[eid] == 0)
                continue;
            const Edge& e = g.edge(eid);
            if (e.tail == e.head)
                return eid;  // a loop leaves v either way
            if ((residual[eid] > 0 && e.tail == v) || (residual[eid] < 0 && e.head == v))
                return eid;
        }
        return none;
    };

    for (;;) {
        std::size_t e0 = lowest_with_residual();
        if (e0 == none)
            break;
        std::size_t start = residual[e0] > 0 ? g.edge(e0).tail : g.edge(e0).head;
        std::vector<std::size_t> verts{start};
        std::vector<WalkStep> path;
        stack_pos[start] = 0;

        std::size_t current = start;
        std::size_t next_edge = e0;
        for (;;) {
            bool forward = residual[next_edge] > 0;
            residual[next_edge] += forward ? -1 : 1;
            current = g.is_loop(next_edge) ? current : g.other_end(next_edge, current);
            path.push_back({next_edge, forward});
            verts.push_back(current);

            if (stack_pos[current] != none) {
                std::size_t at = stack_pos[current];
                CycleWithMultiplicity cm;
                cm.cycle.start = current;
                cm.cycle.steps.assign(path.begin() + static_cast<std::ptrdiff_t>(at), path.end());
                // Take as many further copies as every cycle edge still supports.
                std::int64_t extra = 0;
                bool first = true;
                for (const WalkStep& s : cm.cycle.steps) {
                    std::int64_t avail =
                        s.forward ? std::max<std::int64_t>(residual[s.edge], 0)
                                  : std::max<std::int64_t>(-residual[s.edge], 0);
                    extra = first ? avail : std::min(extra, avail);
                    first = false;
                }
                cm.multiplicity = 1 + extra;
                if (extra > 0)
                    for (const WalkStep& s : cm.cycle.steps)
                        residual[s.edge] += s.forward ? -extra : extra;
                cycles.push_back(std::move(cm));

                for (std::size_t i = at + 1; i + 1 < verts.size(); ++i)
                    stack_pos[verts[i]] = none;
                verts.resize(at + 1);
                path.resize(at);
                if (path.empty()) {
                    stack_pos[current] = none;
                    break;
                }
            } else {
                stack_pos[current] = verts.size() - 1;
            }

            next_edge = lowest_outgoing(current);
            // Conservation keeps an outgoing edge available while the walk
            // is open.
            if (next_edge == none)
                throw std::logic_error("flow walk stuck with residual flow open");
        }
    }
    return cycles;
}

bool is_subclass(const WeightedMultigraph& g, const SpanningForest& f, const HomologyClass& d,
                 const HomologyClass& c) {
    if (d.dimension() != c.dimension())
        throw std::invalid_argument("classes use different forests");
    Circulation fd = circulation_of(g, f, d);
    Circulation fc = circulation_of(g, f, c);
    for (std::size_t id = 0; id < g.edge_count(); ++id) {
        std::int64_t lo = std::min<std::int64_t>(0, fc.flow[id]);
        std::int64_t hi = std::max<std::int64_t>(0, fc.flow[id]);
        if (fd.flow[id] < lo || fd.flow[id] > hi)
            return false;
    }
    return true;
}

bool is_primitive(const WeightedMultigraph& g, const SpanningForest& f, const HomologyClass& h) {
    Circulation c = circulation_of(g, f, h);
    if (c.is_zero())
        return false;

    std::vector<std::size_t> degree(g.vertex_count(), 0);
    std::vector<std::size_t> support;
    for (std::size_t id = 0; id < g.edge_count(); ++id) {
        std::int64_t v = c.flow[id];
        if (v == 0)
            continue;
        if (v != 1 && v != -1)
            return false;
        support.push_back(id);
        degree[g.edge(id).tail] += 1;
        degree[g.edge(id).head] += 1;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (degree[v] != 0 && degree[v] != 2)
            return false;

    // Unit flow on a 2-regular support: a disjoint union of simple cycles.
    // Primitive means exactly one.
    std::vector<bool> seen(g.edge_count(), false);
    std::vector<std::size_t> queue{support[0]};
    seen[support[0]] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        std::size_t eid = queue.back();
        queue.pop_back();
        for (std::size_t v : {g.edge(eid).tail, g.edge(eid).head})
            for (std::size_t other : g.incident(v))
                if (c.flow[other] != 0 && !seen[other]) {
                    seen[other] = true;
                    ++reached;
                    queue.push_back(other);
                }
    }
    return reached == support.size();
}

std::vector<HomologyClass> primitive_decompose(const WeightedMultigraph& g, const SpanningForest& f,
                                               const HomologyClass& h) {
    std::vector<HomologyClass> parts;
    for (const CycleWithMultiplicity& cm : flow_decompose(g, circulation_of(g, f, h))) {
        HomologyClass unit = class_of(g, f, walk_to_circulation(g, cm.cycle));
        for (std::int64_t k = 0; k < cm.multiplicity; ++k)
            parts.push_back(unit);
    }
    return parts;
}

bool check_oplus(const WeightedMultigraph& g, const SpanningForest& f, const HomologyClass& c,
                 std::span<const HomologyClass> parts) {
    HomologyClass sum(c.dimension());
    Rational length_sum;
    for (const HomologyClass& p : parts) {
        if (p.dimension() != c.dimension())
            throw std::invalid_argument("classes use different forests");
        sum += p;
        length_sum += class_length(g, f, p);
    }
    return sum == c && length_sum == class_length(g, f, c);
}

Circulation cycle_circulation(const WeightedMultigraph& g, const CycleWithMultiplicity& cm) {
    if (cm.multiplicity <= 0)
        throw std::invalid_argument("cycle multiplicity must be positive");
    Circulation unit = walk_to_circulation(g, cm.cycle);
    for (auto& v : unit.flow)
        v *= cm.multiplicity;
    return unit;
}

} // namespace cyclespace
