#include "cyclespace/spaces.hpp"

#include <stdexcept>

namespace cyclespace {

OwlSpace make_owl() {
    // u = 0, v = 1, x = 2, y = 3; the middle edge uv comes first so the DFS
    // tree takes it and each eye keeps its own chord.
    std::vector<Edge> edges{
        {0, 1, Rational(1)},  // 0: middle
        {0, 2, Rational(1)},  // 1: u-x
        {2, 1, Rational(1)},  // 2: x-v
        {1, 3, Rational(1)},  // 3: v-y
        {3, 0, Rational(1)},  // 4: y-u
    };
    WeightedMultigraph g(4, std::move(edges));
    SpanningForest f(g);

    ClosedWalk sigma_walk{0, {{1, true}, {2, true}, {0, false}}};
    ClosedWalk tau_walk{0, {{0, true}, {3, true}, {4, true}}};
    HomologyClass sigma = class_of(g, f, walk_to_circulation(g, sigma_walk));
    HomologyClass tau = class_of(g, f, walk_to_circulation(g, tau_walk));

    return OwlSpace{std::move(g), std::move(f), std::move(sigma_walk), std::move(tau_walk),
                    std::move(sigma), std::move(tau), 0};
}

namespace {

WeightedMultigraph ladder_graph(std::size_t n) {
    // Vertices: a_j = 2j, b_j = 2j + 1 for j = 0..n.
    // Edges: rung_0, then per square i: top rail t_i, bottom rail u_i, rung_i.
    std::vector<Edge> edges;
    edges.push_back({0, 1, Rational(1)});  // rung_0
    for (std::size_t i = 1; i <= n; ++i) {
        Rational rail = Rational::pow2(static_cast<long>(i + 1));
        Rational rung = Rational::pow2(static_cast<long>(i));
        edges.push_back({2 * (i - 1), 2 * i, rail});          // t_i
        edges.push_back({2 * (i - 1) + 1, 2 * i + 1, rail});  // u_i
        edges.push_back({2 * i, 2 * i + 1, rung});            // rung_i
    }
    return WeightedMultigraph(2 * (n + 1), std::move(edges));
}

WeightedMultigraph comb_graph(std::size_t n) {
    // Vertices: s_0 = 0; per block i: s_i, f_i (foot), c_i1..c_i3.
    // Edges per block: spine_i, tooth_i, then the four circle sides.
    std::vector<Edge> edges;
    auto s = [](std::size_t i) { return i == 0 ? std::size_t{0} : 5 * i - 4; };
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t foot = 5 * i - 3;
        Rational side = Rational::pow2(static_cast<long>(i + 2));
        edges.push_back({s(i - 1), s(i), Rational::pow2(static_cast<long>(i))});
        edges.push_back({s(i), foot, Rational(1)});
        edges.push_back({foot, foot + 1, side});
        edges.push_back({foot + 1, foot + 2, side});
        edges.push_back({foot + 2, foot + 3, side});
        edges.push_back({foot + 3, foot, side});
    }
    return WeightedMultigraph(5 * n + 1, std::move(edges));
}

WeightedMultigraph sine_comb_graph(std::size_t n) {
    // Vertices: p_0 = 0; per block i: p_i, d_i1..d_i3.
    std::vector<Edge> edges;
    auto p = [](std::size_t i) { return i == 0 ? std::size_t{0} : 4 * i - 3; };
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t d = 4 * i - 2;
        Rational side = Rational::pow2(static_cast<long>(i + 2));
        edges.push_back({p(i - 1), p(i), Rational::pow2(static_cast<long>(i))});
        edges.push_back({p(i), d, side});
        edges.push_back({d, d + 1, side});
        edges.push_back({d + 1, d + 2, side});
        edges.push_back({d + 2, p(i), side});
    }
    return WeightedMultigraph(4 * n + 1, std::move(edges));
}

} // namespace

LadderSpace make_ladder(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("ladder truncation must be at least 1");
    WeightedMultigraph g = ladder_graph(n);
    SpanningForest f(g);

    auto t = [](std::size_t i) { return 3 * i - 2; };
    auto u = [](std::size_t i) { return 3 * i - 1; };
    auto r = [](std::size_t i) { return i == 0 ? std::size_t{0} : 3 * i; };

    // Wind square i (top rail, rung down, bottom rail back, rung up), then
    // advance along the top rail.
    ClosedWalk walk{0, {}};
    for (std::size_t i = 1; i <= n; ++i) {
        walk.steps.push_back({t(i), true});
        walk.steps.push_back({r(i), true});
        walk.steps.push_back({u(i), false});
        walk.steps.push_back({r(i - 1), false});
        walk.steps.push_back({t(i), true});
    }
    // Back along the top, then once around the outer boundary reversed.
    for (std::size_t i = n; i >= 1; --i)
        walk.steps.push_back({t(i), false});
    walk.steps.push_back({r(0), true});
    for (std::size_t i = 1; i <= n; ++i)
        walk.steps.push_back({u(i), true});
    walk.steps.push_back({r(n), false});
    for (std::size_t i = n; i >= 1; --i)
        walk.steps.push_back({t(i), false});
    validate_walk(g, walk);

    std::vector<HomologyClass> square_classes;
    std::vector<Rational> square_perimeters;
    for (std::size_t i = 1; i <= n; ++i) {
        HomologyClass h(f.chords().size());
        h.chord_flow[i - 1] = 1;
        square_classes.push_back(std::move(h));
        square_perimeters.push_back(Rational(4) * Rational::pow2(static_cast<long>(i)));
    }

    return LadderSpace{std::move(g), std::move(f), std::move(walk), std::move(square_classes),
                       std::move(square_perimeters)};
}

Exhaustion ladder_exhaustion() {
    return Exhaustion{[](std::size_t n) { return ladder_graph(n); }, nullptr, std::nullopt};
}

CombSpace make_comb(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("comb truncation must be at least 1");
    WeightedMultigraph g = comb_graph(n);
    SpanningForest f(g);

    auto spine = [](std::size_t i) { return 6 * (i - 1); };
    auto tooth = [](std::size_t i) { return 6 * i - 5; };
    auto circle_first = [](std::size_t i) { return 6 * i - 4; };

    SigmaRepresentative rep;
    std::vector<HomologyClass> circle_classes;
    ClosedWalk walk{0, {}};
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t c = circle_first(i);
        std::size_t foot = 5 * i - 3;
        ClosedWalk tau{foot, {{c, true}, {c + 1, true}, {c + 2, true}, {c + 3, true}}};
        circle_classes.push_back(class_of(g, f, walk_to_circulation(g, tau)));
        rep.items.push_back(
            {i, Rational::pow2(static_cast<long>(i)), CycleWithMultiplicity{tau, 1}});

        walk.steps.push_back({spine(i), true});
        walk.steps.push_back({tooth(i), true});
        for (std::size_t k = 0; k < 4; ++k)
            walk.steps.push_back({c + k, true});
        walk.steps.push_back({tooth(i), false});
    }
    for (std::size_t i = n; i >= 1; --i)
        walk.steps.push_back({spine(i), false});
    validate_walk(g, walk);

    return CombSpace{std::move(g), std::move(f), std::move(rep), std::move(walk),
                     std::move(circle_classes)};
}

Exhaustion comb_exhaustion() {
    return Exhaustion{[](std::size_t n) { return comb_graph(n); }, nullptr, std::nullopt};
}

SigmaRepresentative comb_sigma_stream(std::size_t prefix) {
    if (prefix == 0)
        throw std::invalid_argument("stream prefix must be at least 1");
    SigmaRepresentative rep = make_comb(prefix).sigma_rep;
    rep.tail_squares = [](std::size_t n) -> std::optional<Rational> {
        // sum_{i > n} 4^-i = 4^-n / 3, for the full infinite stream.
        return Rational::pow2(static_cast<long>(2 * n)) * Rational(1, 3);
    };
    return rep;
}

SineCombSpace make_sine_comb(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("sine-comb truncation must be at least 1");
    WeightedMultigraph g = sine_comb_graph(n);
    SpanningForest f(g);

    std::vector<HomologyClass> circle_classes;
    std::vector<Rational> circle_lengths;
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t first = 5 * (i - 1) + 1;  // circle edges follow each path edge
        std::size_t at = 4 * i - 3;           // attachment point p_i
        ClosedWalk sigma{at, {{first, true}, {first + 1, true}, {first + 2, true}, {first + 3, true}}};
        circle_classes.push_back(class_of(g, f, walk_to_circulation(g, sigma)));
        circle_lengths.push_back(Rational::pow2(static_cast<long>(i)));
    }

    return SineCombSpace{std::move(g), std::move(f), std::move(circle_classes),
                         std::move(circle_lengths)};
}

WeightedMultigraph make_cycle(std::size_t k, const Rational& total_length) {
    if (k == 0)
        throw std::invalid_argument("cycle needs at least one vertex");
    if (!total_length.is_positive())
        throw std::invalid_argument("cycle length must be positive");
    Rational side = total_length / Rational(static_cast<long>(k));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i)
        edges.push_back({i, (i + 1) % k, side});
    return WeightedMultigraph(k, std::move(edges));
}

} // namespace cyclespace
