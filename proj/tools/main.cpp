// cyclespace command-line tool: exact cycle-space computations on weighted
// multigraphs, plus the bundled demo spaces.
//
// Exit codes: 0 success, 2 input error, 3 semantic mismatch between inputs,
// 4 precondition failure reported by the computation.

#include <fstream>
#include <future>
#include <numbers>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclespace/io.hpp"
#include "cyclespace/spaces.hpp"

using namespace cyclespace;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_mismatch = 3;
constexpr int exit_precondition = 4;

struct CliError {
    int code;
    std::string message;
};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CliError{exit_input, "cannot open " + path};
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw CliError{exit_input, path + ": " + e.what()};
    }
}

WeightedMultigraph load_graph(const std::string& path) {
    try {
        return graph_from_json(load_json_file(path));
    } catch (const std::invalid_argument& e) {
        throw CliError{exit_input, path + ": " + e.what()};
    } catch (const std::domain_error& e) {
        throw CliError{exit_input, path + ": " + e.what()};
    }
}

/// Class specs: a chord vector "1,-1,0" or a walk "walk:0+,3+,4-".
HomologyClass parse_class_spec(const WeightedMultigraph& g, const SpanningForest& f,
                               const std::string& spec) {
    try {
        if (spec.rfind("walk:", 0) == 0) {
            ClosedWalk walk;
            std::stringstream ss(spec.substr(5));
            std::string tok;
            bool first = true;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty() || (tok.back() != '+' && tok.back() != '-'))
                    throw std::invalid_argument("walk steps look like '3+' or '3-'");
                bool forward = tok.back() == '+';
                std::size_t edge = std::stoul(tok.substr(0, tok.size() - 1));
                if (edge >= g.edge_count())
                    throw std::invalid_argument("walk step edge out of range");
                if (first) {
                    walk.start = forward ? g.edge(edge).tail : g.edge(edge).head;
                    first = false;
                }
                walk.steps.push_back({edge, forward});
            }
            return class_of(g, f, walk_to_circulation(g, walk));
        }
        HomologyClass h(0);
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ','))
            h.chord_flow.push_back(std::stoll(tok));
        if (h.dimension() != f.chords().size())
            throw CliError{exit_mismatch,
                           "class has " + std::to_string(h.dimension()) + " coordinates but the "
                           "spanning forest has " + std::to_string(f.chords().size()) + " chords"};
        return h;
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        throw CliError{exit_input, std::string("bad class spec: ") + e.what()};
    }
}

void write_outputs(const json& report, const std::string& json_path,
                   const WeightedMultigraph& g, const std::string& dot_path) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out)
            throw CliError{exit_input, "cannot write " + json_path};
        out << report.dump(2) << "\n";
    }
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out)
            throw CliError{exit_input, "cannot write " + dot_path};
        out << graph_to_dot(g);
    }
}

std::string flows_brief(const Circulation& c) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t id = 0; id < c.flow.size(); ++id) {
        if (c.flow[id] == 0)
            continue;
        if (any)
            os << " ";
        os << "e" << id << ":" << (c.flow[id] > 0 ? "+" : "") << c.flow[id];
        any = true;
    }
    return any ? os.str() : "0";
}

std::string exact_with_approx(const Rational& r) {
    std::ostringstream os;
    os << r.to_string() << " (~" << r.to_double() << ")";
    return os.str();
}

int cmd_minrep(const std::string& graph_file, const std::string& class_spec,
               const std::string& json_path, const std::string& dot_path) {
    WeightedMultigraph g = load_graph(graph_file);
    SpanningForest f(g);
    HomologyClass h = parse_class_spec(g, f, class_spec);

    auto [circ, len] = min_length_representative(g, f, h);
    std::vector<HomologyClass> parts = primitive_decompose(g, f, h);

    std::cout << "minimal representative\n";
    std::cout << "  class: " << class_to_json(h).dump() << "\n";
    std::cout << "  length: " << exact_with_approx(len) << "\n";
    std::cout << "  circulation: " << flows_brief(circ) << "\n";
    std::cout << "  primitive decomposition: " << parts.size() << " piece(s)\n";
    json pieces = json::array();
    Rational piece_sum;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Rational plen = class_length(g, f, parts[i]);
        piece_sum += plen;
        std::cout << "    piece " << i << ": length " << exact_with_approx(plen) << ", class "
                  << class_to_json(parts[i]).dump() << "\n";
        pieces.push_back({{"class", class_to_json(parts[i])},
                          {"circulation", circulation_to_json(circulation_of(g, f, parts[i]))},
                          {"length", exact_number(plen)}});
    }
    bool economical = check_oplus(g, f, h, parts);
    std::cout << "  lengths add exactly: " << (economical ? "yes" : "NO") << "\n";

    AreaBudget upper = d1_upper_bound(g, f, h);
    std::optional<InvPiSquared> lower = d1_lower_bound(g, f, h);
    std::cout << "  d1 upper bound: " << upper.to_string() << " (~" << upper.approx() << ")\n";
    if (lower)
        std::cout << "  d1 lower bound: " << lower->coefficient.to_string() << "/pi^2\n";
    else
        std::cout << "  d1 lower bound: no certified lower bound\n";
    json lower_json;
    if (lower)
        lower_json = {{"certified", true},
                      {"exact_inv_pi_squared", lower->coefficient.to_string()},
                      {"approx", lower->coefficient.to_double() / (std::numbers::pi * std::numbers::pi)}};
    else
        lower_json = {{"certified", false}};

    json report{{"command", "minrep"},
                {"input_digest", json_digest(graph_to_json(g))},
                {"results",
                 {{"class", class_to_json(h)},
                  {"length", exact_number(len)},
                  {"piece_length_sum", exact_number(piece_sum)},
                  {"oplus", economical},
                  {"d1_upper", budget_number(upper)},
                  {"d1_lower", lower_json}}},
                {"witnesses", {{"circulation", circulation_to_json(circ)}, {"pieces", pieces}}}};
    write_outputs(report, json_path, g, dot_path);
    return economical ? exit_ok : exit_precondition;
}

int cmd_decompose_z2(const std::string& graph_file, const std::string& edges_spec,
                     const std::string& json_path, const std::string& dot_path) {
    WeightedMultigraph g = load_graph(graph_file);

    EdgeSetZ2 z(g.edge_count());
    try {
        json j = edges_spec.find(".json") != std::string::npos ? load_json_file(edges_spec)
                                                               : json::parse(edges_spec);
        z = edge_set_from_json(g, j);
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        throw CliError{exit_input, std::string("bad edge set: ") + e.what()};
    }

    std::vector<EdgeSetZ2> circuits;
    try {
        circuits = decompose_edge_disjoint_circuits(g, z);
    } catch (const std::domain_error& e) {
        throw CliError{exit_precondition, e.what()};
    }

    Rational input_length, circuit_length;
    for (std::size_t id : z.indices())
        input_length += g.edge(id).length;

    std::cout << "edge-disjoint circuit decomposition\n";
    std::cout << "  input: " << edge_set_to_json(z).dump() << " (length "
              << input_length.to_string() << ")\n";
    std::cout << "  circuits: " << circuits.size() << "\n";
    json parts = json::array();
    EdgeSetZ2 recombined(g.edge_count());
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        Rational len;
        for (std::size_t id : circuits[i].indices())
            len += g.edge(id).length;
        circuit_length += len;
        recombined ^= circuits[i];
        std::cout << "    circuit " << i << ": " << edge_set_to_json(circuits[i]).dump()
                  << " (length " << len.to_string() << ")\n";
        parts.push_back({{"edges", edge_set_to_json(circuits[i])}, {"length", exact_number(len)}});
    }
    bool partition = recombined == z;
    bool conserved = circuit_length == input_length;
    std::cout << "  partition verified: " << (partition ? "yes" : "NO")
              << ", length conserved: " << (conserved ? "yes" : "NO") << "\n";

    json report{{"command", "decompose-z2"},
                {"input_digest", json_digest(graph_to_json(g))},
                {"results",
                 {{"circuit_count", circuits.size()},
                  {"input_length", exact_number(input_length)},
                  {"circuit_length_sum", exact_number(circuit_length)},
                  {"partition", partition},
                  {"length_conserved", conserved}}},
                {"witnesses", {{"circuits", parts}}}};
    write_outputs(report, json_path, g, dot_path);
    return partition && conserved ? exit_ok : exit_precondition;
}

int cmd_verify_2basis(const std::string& graph_file, const std::string& basis_file,
                      const std::string& json_path, const std::string& dot_path) {
    WeightedMultigraph g = load_graph(graph_file);
    json jb = load_json_file(basis_file);
    if (!jb.is_array())
        throw CliError{exit_input, basis_file + ": basis must be an array of edge-index arrays"};
    std::vector<EdgeSetZ2> basis;
    try {
        for (const json& entry : jb)
            basis.push_back(edge_set_from_json(g, entry));
    } catch (const std::invalid_argument& e) {
        throw CliError{exit_input, basis_file + ": " + e.what()};
    }

    TwoBasisReport r = verify_two_basis(g, basis);
    std::cout << "2-basis verification\n";
    std::cout << "  members: " << basis.size() << ", rank: " << r.rank << " (required "
              << r.required_rank << ")\n";
    std::cout << "  verdict: " << (r.ok ? "true" : "false: " + r.diagnostic) << "\n";

    json report{{"command", "verify-2basis"},
                {"input_digest", json_digest(graph_to_json(g))},
                {"results",
                 {{"ok", r.ok},
                  {"diagnostic", r.diagnostic},
                  {"rank", r.rank},
                  {"required_rank", r.required_rank}}}};
    write_outputs(report, json_path, g, dot_path);
    return exit_ok;
}

/// Runs fn(i) for i = 1..n, all at once when jobs > 1, results in order.
std::vector<std::string> rows_in_order(std::size_t n, unsigned jobs,
                                       const std::function<std::string(std::size_t)>& fn) {
    std::vector<std::string> rows(n);
    if (jobs <= 1) {
        for (std::size_t i = 1; i <= n; ++i)
            rows[i - 1] = fn(i);
        return rows;
    }
    std::vector<std::future<std::string>> futures(n);
    for (std::size_t i = 1; i <= n; ++i)
        futures[i - 1] = std::async(std::launch::async, fn, i);
    for (std::size_t i = 0; i < n; ++i)
        rows[i] = futures[i].get();
    return rows;
}

int demo_owl(const std::string& json_path, const std::string& dot_path) {
    OwlSpace owl = make_owl();
    const auto& g = owl.graph;
    const auto& f = owl.forest;
    HomologyClass c = owl.sigma + owl.tau;

    Rational lsigma = class_length(g, f, owl.sigma);
    Rational ltau = class_length(g, f, owl.tau);
    Rational lsum = class_length(g, f, c);
    std::vector<HomologyClass> eyes{owl.sigma, owl.tau};
    bool naive = check_oplus(g, f, c, eyes);
    std::vector<HomologyClass> parts = primitive_decompose(g, f, c);
    bool economical = check_oplus(g, f, c, parts);

    std::cout << "owl demo: economical vs naive decomposition\n";
    std::cout << "  l(sigma) = " << lsigma.to_string() << ", l(tau) = " << ltau.to_string()
              << ", sum = " << (lsigma + ltau).to_string() << "\n";
    std::cout << "  l(sigma + tau) = " << lsum.to_string()
              << "  (the minimal circulation avoids the middle edge)\n";
    std::cout << "  oplus with {sigma, tau}: " << (naive ? "true" : "false") << "\n";
    std::cout << "  primitive decomposition: " << parts.size() << " circle of length "
              << class_length(g, f, parts.at(0)).to_string()
              << ", oplus: " << (economical ? "true" : "false") << "\n";

    json report{{"command", "demo owl"},
                {"input_digest", json_digest(graph_to_json(g))},
                {"results",
                 {{"sigma_length", exact_number(lsigma)},
                  {"tau_length", exact_number(ltau)},
                  {"sum_class_length", exact_number(lsum)},
                  {"oplus_naive", naive},
                  {"oplus_primitive", economical}}},
                {"witnesses",
                 {{"minimal_circulation", circulation_to_json(circulation_of(g, f, c))}}},
                {"manifest",
                 {{"sigma", class_to_json(owl.sigma)},
                  {"tau", class_to_json(owl.tau)},
                  {"sigma_walk", walk_to_json(owl.sigma_walk)},
                  {"tau_walk", walk_to_json(owl.tau_walk)},
                  {"middle_edge", owl.middle_edge}}}};
    write_outputs(report, json_path, g, dot_path);
    return !naive && economical && lsum == Rational(4) ? exit_ok : exit_precondition;
}

int demo_ladder(std::size_t n, unsigned jobs, const std::string& json_path,
                const std::string& dot_path) {
    std::cout << "ladder demo: the winding loop nets to the zero circulation\n";
    std::cout << "  n   steps  net-zero\n";
    bool all_zero = true;
    json rows = json::array();
    auto row = [](std::size_t i) {
        LadderSpace ladder = make_ladder(i);
        bool zero = walk_to_circulation(ladder.graph, ladder.sigma_imitation).is_zero();
        std::ostringstream os;
        os << "  " << i << "   " << ladder.sigma_imitation.steps.size() << "   "
           << (zero ? "yes" : "NO");
        return os.str();
    };
    for (const std::string& line : rows_in_order(n, jobs, row)) {
        std::cout << line << "\n";
        rows.push_back(line);
        if (line.find("NO") != std::string::npos)
            all_zero = false;
    }

    LadderSpace last = make_ladder(n);
    json squares = json::array();
    for (const HomologyClass& sq : last.square_classes)
        squares.push_back(class_to_json(sq));
    json report{{"command", "demo ladder"},
                {"input_digest", json_digest(graph_to_json(last.graph))},
                {"results", {{"all_net_zero", all_zero}, {"rows", rows}}},
                {"manifest",
                 {{"square_classes", squares},
                  {"sigma_imitation", walk_to_json(last.sigma_imitation)}}}};
    write_outputs(report, json_path, last.graph, dot_path);
    return all_zero ? exit_ok : exit_precondition;
}

int demo_comb(std::size_t n, unsigned jobs, const std::string& json_path,
              const std::string& dot_path) {
    std::cout << "comb demo: sigma-representative vs connected walk\n";
    std::cout << "  n   sigma-rep length   connected walk length\n";
    json rows = json::array();
    auto row = [](std::size_t i) {
        CombSpace comb = make_comb(i);
        Rational rep;
        for (const SigmaItem& item : comb.sigma_rep.items)
            rep += item.length;
        Rational walk = walk_length(comb.graph, comb.connected_walk);
        std::ostringstream os;
        os << "  " << i << "   " << rep.to_string() << " (~" << rep.to_double() << ")   "
           << walk.to_string() << " (~" << walk.to_double() << ")";
        return os.str();
    };
    for (const std::string& line : rows_in_order(n, jobs, row)) {
        std::cout << line << "\n";
        rows.push_back(line);
    }

    CombSpace comb = make_comb(n);
    Rational rep;
    for (const SigmaItem& item : comb.sigma_rep.items)
        rep += item.length;
    Rational walk = walk_length(comb.graph, comb.connected_walk);
    std::cout << "  limit of the representative lengths: 1\n";

    json circles = json::array();
    for (const HomologyClass& c : comb.circle_classes)
        circles.push_back(class_to_json(c));
    json report{{"command", "demo comb"},
                {"input_digest", json_digest(graph_to_json(comb.graph))},
                {"results",
                 {{"rows", rows},
                  {"sigma_rep_length", exact_number(rep)},
                  {"connected_walk_length", exact_number(walk)}}},
                {"manifest",
                 {{"circle_classes", circles},
                  {"sigma_representative", sigma_to_json(comb.sigma_rep)},
                  {"connected_walk", walk_to_json(comb.connected_walk)}}}};
    write_outputs(report, json_path, comb.graph, dot_path);
    return exit_ok;
}

int demo_sine_comb(std::size_t n, const std::string& json_path, const std::string& dot_path) {
    SineCombSpace sc = make_sine_comb(n);
    std::cout << "sine-comb demo: Cauchy budgets without a certified limit\n";
    std::cout << "  i   d1(sigma_i, 0) upper bound   lower bound (1/pi^2 units)\n";
    json rows = json::array();
    for (std::size_t i = 1; i <= n; ++i) {
        AreaBudget up = d1_upper_bound(sc.graph, sc.forest, sc.circle_classes[i - 1]);
        InvPiSquared low = circle_lower_bound_rational(sc.circle_lengths[i - 1]);
        std::ostringstream os;
        os << "  " << i << "   " << up.to_string() << " (~" << up.approx() << ")   "
           << low.coefficient.to_string();
        std::cout << os.str() << "\n";
        rows.push_back(os.str());
    }

    // Tail budgets of the circle stream vanish: the partial sums are Cauchy.
    SigmaRepresentative rep;
    for (std::size_t i = 1; i <= n; ++i)
        rep.items.push_back(
            {i, sc.circle_lengths[i - 1], CycleWithMultiplicity{ClosedWalk{0, {}}, 1}});
    rep.tail_squares = [](std::size_t k) -> std::optional<Rational> {
        return Rational::pow2(static_cast<long>(2 * k)) * Rational(1, 3);
    };
    std::vector<Rational> schedule{Rational(1, 10), Rational(1, 100), Rational(1, 1000)};
    bool cauchy = cauchy_verify(rep, schedule);
    std::cout << "  cauchy_verify at [1/10, 1/100, 1/1000]: " << (cauchy ? "true" : "false")
              << "\n";
    std::cout << "  every class keeps a positive lower bound, so no stored class is the limit\n";

    json circles = json::array();
    for (const HomologyClass& c : sc.circle_classes)
        circles.push_back(class_to_json(c));
    json report{{"command", "demo sine-comb"},
                {"input_digest", json_digest(graph_to_json(sc.graph))},
                {"results", {{"rows", rows}, {"cauchy", cauchy}}},
                {"manifest", {{"circle_classes", circles}}}};
    write_outputs(report, json_path, sc.graph, dot_path);
    return cauchy ? exit_ok : exit_precondition;
}

int demo_circle(const std::string& json_path, const std::string& dot_path) {
    std::cout << "circle demo: filling the unit circle costs at least 1\n";
    Rational m = circle_lower_bound(Rational(2));  // circumference 2*pi
    std::cout << "  lower bound at circumference 2*pi: " << m.to_string() << "\n";
    std::cout << "  quadratic scaling:";
    json scalings = json::array();
    for (long s = 2; s <= 5; ++s) {
        Rational scaled = circle_lower_bound(Rational(2 * s));
        std::cout << "  " << s << "x -> " << scaled.to_string();
        scalings.push_back(scaled.to_string());
    }
    std::cout << "\n";

    WeightedMultigraph kgon = make_cycle(8, Rational(1));
    SpanningForest f(kgon);
    HomologyClass unit(1);
    unit.chord_flow = {1};
    std::cout << "  unit-length 8-gon class is primitive: "
              << (is_primitive(kgon, f, unit) ? "true" : "false") << "\n";

    json report{{"command", "demo circle"},
                {"input_digest", json_digest(graph_to_json(kgon))},
                {"results", {{"lower_bound_2pi", m.to_string()}, {"scalings", scalings}}}};
    write_outputs(report, json_path, kgon, dot_path);
    return m == Rational(1) ? exit_ok : exit_precondition;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimal homology representatives and cycle decompositions"};
    app.require_subcommand(1);

    std::string graph_file, class_spec, edges_spec, basis_file, json_path, dot_path;
    std::size_t n = 1;
    unsigned jobs = 1;

    CLI::App* minrep = app.add_subcommand("minrep", "minimal-length representative of a class");
    minrep->add_option("--graph", graph_file, "graph JSON file")->required();
    minrep->add_option("--class", class_spec, "chord vector '1,-1' or 'walk:0+,2-'")->required();
    minrep->add_option("--json", json_path, "write the JSON report here");
    minrep->add_option("--dot", dot_path, "write a DOT rendering here");

    CLI::App* dec = app.add_subcommand("decompose-z2", "edge-disjoint circuit decomposition");
    dec->add_option("--graph", graph_file, "graph JSON file")->required();
    dec->add_option("--edges", edges_spec, "edge-index array, inline or a .json file")->required();
    dec->add_option("--json", json_path, "write the JSON report here");
    dec->add_option("--dot", dot_path, "write a DOT rendering here");

    CLI::App* verify = app.add_subcommand("verify-2basis", "verify a candidate 2-basis");
    verify->add_option("--graph", graph_file, "graph JSON file")->required();
    verify->add_option("--basis", basis_file, "JSON array of edge-index arrays")->required();
    verify->add_option("--json", json_path, "write the JSON report here");
    verify->add_option("--dot", dot_path, "write a DOT rendering here");

    CLI::App* demo = app.add_subcommand("demo", "run a bundled example space");
    std::string demo_name;
    demo->add_option("name", demo_name, "owl | ladder | comb | sine-comb | circle")->required();
    demo->add_option("--n", n, "truncation index")->check(CLI::PositiveNumber);
    demo->add_option("--jobs", jobs, "parallel workers for table rows")->check(CLI::PositiveNumber);
    demo->add_option("--json", json_path, "write the JSON report here");
    demo->add_option("--dot", dot_path, "write a DOT rendering here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (minrep->parsed())
            return cmd_minrep(graph_file, class_spec, json_path, dot_path);
        if (dec->parsed())
            return cmd_decompose_z2(graph_file, edges_spec, json_path, dot_path);
        if (verify->parsed())
            return cmd_verify_2basis(graph_file, basis_file, json_path, dot_path);
        if (demo->parsed()) {
            if (demo_name == "owl")
                return demo_owl(json_path, dot_path);
            if (demo_name == "ladder")
                return demo_ladder(n, jobs, json_path, dot_path);
            if (demo_name == "comb")
                return demo_comb(n, jobs, json_path, dot_path);
            if (demo_name == "sine-comb")
                return demo_sine_comb(n, json_path, dot_path);
            if (demo_name == "circle")
                return demo_circle(json_path, dot_path);
            std::cerr << "unknown demo '" << demo_name << "'\n";
            return exit_input;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
