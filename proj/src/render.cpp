#include "lshapes/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lshapes {

namespace {

Int coord_max(const Diagram& D, std::size_t axis) {
    Int m = 0;
    for (const LatticePoint& p : D.points) m = std::max(m, p[axis]);
    return m;
}

std::string pad(Int value, std::size_t width) {
    std::string s = std::to_string(value);
    while (s.size() < width) s.insert(s.begin(), ' ');
    return s;
}

}  // namespace

std::string render_ascii(const Diagram& D) {
    if (D.dimension == 0 || D.dimension > 3)
        throw std::invalid_argument("render_ascii supports dimensions 1 to 3 only");

    std::size_t width = 1;
    for (Int label : D.labels) width = std::max(width, std::to_string(label).size());
    std::string blank(width, '.');

    std::map<LatticePoint, Int> cell;
    for (std::size_t i = 0; i < D.points.size(); ++i) cell[D.points[i]] = D.labels[i];

    std::ostringstream out;
    if (D.dimension == 1) {
        Int xmax = coord_max(D, 0);
        for (Int x = 0; x <= xmax; ++x) {
            if (x) out << ' ';
            auto it = cell.find(LatticePoint{x});
            out << (it == cell.end() ? blank : pad(it->second, width));
        }
        out << '\n';
        return out.str();
    }

    Int zmax = D.dimension == 3 ? coord_max(D, 2) : 0;
    Int ymax = coord_max(D, 1);
    Int xmax = coord_max(D, 0);
    for (Int z = 0; z <= zmax; ++z) {
        if (D.dimension == 3) out << "z=" << z << '\n';
        for (Int y = ymax; y >= 0; --y) {
            for (Int x = 0; x <= xmax; ++x) {
                if (x) out << ' ';
                LatticePoint p = D.dimension == 3 ? LatticePoint{x, y, z} : LatticePoint{x, y};
                auto it = cell.find(p);
                out << (it == cell.end() ? blank : pad(it->second, width));
            }
            out << '\n';
        }
        if (D.dimension == 3 && z < zmax) out << '\n';
    }
    return out.str();
}

namespace {

nlohmann::json points_json(const Diagram& D) {
    nlohmann::json points = nlohmann::json::array();
    for (std::size_t i = 0; i < D.points.size(); ++i) {
        points.push_back({{"coords", D.points[i].coords},
                          {"class", D.labels[i]},
                          {"weight", D.weights[i]}});
    }
    return points;
}

}  // namespace

nlohmann::json diagram_json(const Diagram& D, const WeightedCayleyDigraph& G) {
    return {{"kind", "mdd"},
            {"modulus", G.modulus()},
            {"steps", G.steps()},
            {"weights", G.weights()},
            {"points", points_json(D)}};
}

nlohmann::json diagram_json(const Diagram& D, const NumericalSemigroup& S,
                            const std::vector<Int>& closed_set) {
    std::vector<Int> sorted = closed_set;
    std::sort(sorted.begin(), sorted.end());
    return {{"kind", "lshape"},
            {"closed_set", sorted},
            {"steps", S.generators()},
            {"weights", S.generators()},
            {"points", points_json(D)}};
}

}  // namespace lshapes
