#ifndef CYCLESPACE_TEST_UTIL_HPP
#define CYCLESPACE_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "cyclespace/graph.hpp"

namespace testutil {

/// Random multigraph: endpoints uniform (loops allowed), lengths small
/// positive rationals. Not necessarily connected.
inline cyclespace::WeightedMultigraph random_multigraph(std::mt19937& rng, std::size_t vertices,
                                                        std::size_t edges) {
    std::uniform_int_distribution<std::size_t> vtx(0, vertices - 1);
    std::uniform_int_distribution<long> num(1, 6);
    std::uniform_int_distribution<long> den(1, 6);
    std::vector<cyclespace::Edge> list;
    for (std::size_t i = 0; i < edges; ++i)
        list.push_back({vtx(rng), vtx(rng), cyclespace::Rational(num(rng), den(rng))});
    return cyclespace::WeightedMultigraph(vertices, std::move(list));
}

/// Random connected multigraph: a random spanning tree plus extra edges.
/// Requires edges >= vertices - 1.
inline cyclespace::WeightedMultigraph random_connected_multigraph(std::mt19937& rng,
                                                                  std::size_t vertices,
                                                                  std::size_t edges,
                                                                  bool unit_lengths = false) {
    std::uniform_int_distribution<long> num(1, 6);
    std::uniform_int_distribution<long> den(1, 6);
    auto length = [&]() {
        return unit_lengths ? cyclespace::Rational(1) : cyclespace::Rational(num(rng), den(rng));
    };
    std::vector<cyclespace::Edge> list;
    for (std::size_t v = 1; v < vertices; ++v) {
        std::uniform_int_distribution<std::size_t> prev(0, v - 1);
        list.push_back({prev(rng), v, length()});
    }
    std::uniform_int_distribution<std::size_t> vtx(0, vertices - 1);
    while (list.size() < edges)
        list.push_back({vtx(rng), vtx(rng), length()});
    // Shuffle so tree edges do not always precede chords.
    std::shuffle(list.begin(), list.end(), rng);
    return cyclespace::WeightedMultigraph(vertices, std::move(list));
}

} // namespace testutil

#endif
