#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/enumerate.hpp"

namespace hurwitz {

// Bipartite-map view of a constellation: edges are the points 1..d, black
// vertices are the cycles of g1, white vertices the cycles of g2, and the
// disc regions the cycles of g3. Vertex valences reproduce the first two
// partitions of the datum and region lengths the third.
struct Dessin {
    int degree = 0;
    std::vector<std::vector<int>> black;    // cycles of g1, 1-based points
    std::vector<std::vector<int>> white;    // cycles of g2
    std::vector<std::vector<int>> regions;  // cycles of g3
};

namespace detail {

inline std::vector<std::vector<int>> cycles_of(const Perm& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g.degree(), 0);
    for (int i = 0; i < g.degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = g(j)) {
            seen[j] = 1;
            cyc.push_back(j + 1);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

}  // namespace detail

inline Dessin dessin_of(const Constellation& c) {
    Dessin d;
    d.degree = c.degree;
    d.black = detail::cycles_of(c.g[0]);
    d.white = detail::cycles_of(c.g[1]);
    d.regions = detail::cycles_of(c.g[2]);
    return d;
}

// Undirected graph in DOT syntax: black/white vertex attributes, one edge per
// point of {1..d} joining its black and white vertex. Regions go in the JSON
// sidecar (DOT has no face concept).
inline std::string dessin_to_dot(const Dessin& d, const std::string& name = "dessin") {
    std::vector<int> black_of(d.degree + 1), white_of(d.degree + 1);
    for (std::size_t v = 0; v < d.black.size(); ++v)
        for (int pt : d.black[v]) black_of[pt] = static_cast<int>(v);
    for (std::size_t v = 0; v < d.white.size(); ++v)
        for (int pt : d.white[v]) white_of[pt] = static_cast<int>(v);

    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t v = 0; v < d.black.size(); ++v)
        os << "  b" << v << " [color=black, shape=circle, style=filled, valence="
           << d.black[v].size() << "];\n";
    for (std::size_t v = 0; v < d.white.size(); ++v)
        os << "  w" << v << " [color=white, shape=circle, valence=" << d.white[v].size()
           << "];\n";
    for (int pt = 1; pt <= d.degree; ++pt)
        os << "  b" << black_of[pt] << " -- w" << white_of[pt] << " [label=\"" << pt << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace hurwitz
