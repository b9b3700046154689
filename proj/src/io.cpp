#include "cyclespace/io.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace cyclespace {

using nlohmann::json;

namespace {

bool is_index(const json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0);
}

} // namespace

WeightedMultigraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph json needs 'vertices' and 'edges'");
    if (!is_index(j["vertices"]))
        throw std::invalid_argument("'vertices' must be a non-negative integer");
    std::size_t n = j["vertices"].get<std::size_t>();
    const json& edges = j["edges"];
    if (!edges.is_array())
        throw std::invalid_argument("'edges' must be an array");

    std::vector<Edge> list(edges.size(), Edge{0, 0, Rational(1)});
    std::vector<bool> seen(edges.size(), false);
    for (const json& je : edges) {
        if (!je.is_object() || !je.contains("id") || !je.contains("tail") ||
            !je.contains("head") || !je.contains("length"))
            throw std::invalid_argument("edge entries need id, tail, head, length");
        if (!is_index(je["id"]) || !is_index(je["tail"]) || !is_index(je["head"]) ||
            !je["length"].is_string())
            throw std::invalid_argument("edge entry has a wrongly typed field");
        std::size_t id = je["id"].get<std::size_t>();
        if (id >= list.size() || seen[id])
            throw std::invalid_argument("edge ids must be dense 0..m-1 without repeats");
        seen[id] = true;
        list[id] = Edge{je["tail"].get<std::size_t>(), je["head"].get<std::size_t>(),
                        Rational::from_string(je["length"].get<std::string>())};
    }
    return WeightedMultigraph(n, std::move(list));
}

json graph_to_json(const WeightedMultigraph& g) {
    json edges = json::array();
    for (std::size_t id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        edges.push_back({{"id", id},
                         {"tail", e.tail},
                         {"head", e.head},
                         {"length", e.length.to_string()}});
    }
    return json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

std::string graph_to_dot(const WeightedMultigraph& g) {
    std::ostringstream os;
    os << "graph {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        os << "  " << v << ";\n";
    for (std::size_t id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        os << "  " << e.tail << " -- " << e.head << " [label=\"" << e.length.to_string()
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

EdgeSetZ2 edge_set_from_json(const WeightedMultigraph& g, const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("edge set must be an array of edge ids");
    EdgeSetZ2 z(g.edge_count());
    for (const json& v : j) {
        if (!is_index(v))
            throw std::invalid_argument("edge set entries must be edge ids");
        std::size_t id = v.get<std::size_t>();
        if (id >= g.edge_count())
            throw std::invalid_argument("edge id " + std::to_string(id) + " out of range");
        z.set(id);
    }
    return z;
}

json edge_set_to_json(const EdgeSetZ2& z) {
    return json(z.indices());
}

Circulation circulation_from_json(const WeightedMultigraph& g, const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("circulation must be an array of {edge, flow}");
    Circulation c(g.edge_count());
    for (const json& entry : j) {
        if (!entry.is_object() || !entry.contains("edge") || !entry.contains("flow") ||
            !is_index(entry["edge"]) || !entry["flow"].is_number_integer())
            throw std::invalid_argument("circulation entries need integer edge and flow");
        std::size_t id = entry["edge"].get<std::size_t>();
        if (id >= g.edge_count())
            throw std::invalid_argument("edge id " + std::to_string(id) + " out of range");
        c.flow[id] = entry["flow"].get<std::int64_t>();
    }
    return c;
}

json circulation_to_json(const Circulation& c) {
    json out = json::array();
    for (std::size_t id = 0; id < c.flow.size(); ++id)
        if (c.flow[id] != 0)
            out.push_back({{"edge", id}, {"flow", c.flow[id]}});
    return out;
}

HomologyClass class_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("class must be an array of chord coordinates");
    HomologyClass h(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            throw std::invalid_argument("class coordinates must be integers");
        h.chord_flow[i] = j[i].get<std::int64_t>();
    }
    return h;
}

json class_to_json(const HomologyClass& h) {
    return json(h.chord_flow);
}

ClosedWalk walk_from_json(const json& j) {
    if (!j.is_object() || !j.contains("start") || !j.contains("steps") || !is_index(j["start"]) ||
        !j["steps"].is_array())
        throw std::invalid_argument("walk needs a start vertex and a step array");
    ClosedWalk w;
    w.start = j["start"].get<std::size_t>();
    for (const json& js : j["steps"]) {
        if (!js.is_object() || !js.contains("edge") || !js.contains("forward") ||
            !is_index(js["edge"]) || !js["forward"].is_boolean())
            throw std::invalid_argument("walk steps need an edge id and a direction");
        w.steps.push_back({js["edge"].get<std::size_t>(), js["forward"].get<bool>()});
    }
    return w;
}

json walk_to_json(const ClosedWalk& w) {
    json steps = json::array();
    for (const WalkStep& s : w.steps)
        steps.push_back({{"edge", s.edge}, {"forward", s.forward}});
    return json{{"start", w.start}, {"steps", steps}};
}

json sigma_to_json(const SigmaRepresentative& rep) {
    json items = json::array();
    for (const SigmaItem& item : rep.items)
        items.push_back({{"truncation", item.truncation},
                         {"length", exact_number(item.length)},
                         {"cycle", walk_to_json(item.cycle.cycle)},
                         {"multiplicity", item.cycle.multiplicity}});
    return json{{"items", items}, {"streamed", static_cast<bool>(rep.tail_squares)}};
}

json exact_number(const Rational& r) {
    return json{{"exact", r.to_string()}, {"approx", r.to_double()}};
}

json budget_number(const AreaBudget& b) {
    json out{{"display", b.to_string()}, {"approx", b.approx()}};
    if (b.finite())
        out["exact_pi_coefficient"] = b.pi_coefficient().to_string();
    return out;
}

std::string json_digest(const json& j) {
    std::string dump = j.dump();
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : dump) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

} // namespace cyclespace
