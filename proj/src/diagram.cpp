#include "lshapes/diagram.hpp"

#include "lshapes/factorization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>

namespace lshapes {

namespace {

// Shared search core for MDDs and L-shapes: pick one candidate point per
// label so that the union is downward closed. Selecting a point forces every
// point below it to represent its own label; conflicts prune the branch.
struct SdrSearch {
    std::vector<Int> order;                       // labels, processing order
    std::map<Int, std::vector<LatticePoint>> candidates;
    // Returns the label a point represents, or nullopt if the point is not a
    // valid representative of any label (wrong weight / element outside C).
    std::function<std::optional<Int>(const LatticePoint&)> label_of;

    std::map<Int, LatticePoint> assignment;
    std::vector<std::map<Int, LatticePoint>> solutions;

    // Candidate x is usable only if everything below it is itself a valid
    // representative of its own label; condition (2)/(C2) makes any other
    // candidate globally unusable.
    void prefilter() {
        for (auto& [label, cands] : candidates) {
            std::vector<LatticePoint> kept;
            for (const LatticePoint& x : cands) {
                bool ok = for_each_below(
                    x, [&](const LatticePoint& y) { return label_of(y).has_value(); });
                if (ok) kept.push_back(x);
            }
            cands = std::move(kept);
        }
    }

    bool force(const LatticePoint& x, std::vector<Int>& trail) {
        return for_each_below(x, [&](const LatticePoint& y) {
            Int label = *label_of(y);
            auto [it, inserted] = assignment.try_emplace(label, y);
            if (inserted) {
                trail.push_back(label);
                return true;
            }
            return it->second == y;
        });
    }

    void undo(const std::vector<Int>& trail) {
        for (Int label : trail) assignment.erase(label);
    }

    void recurse(std::size_t index) {
        if (index == order.size()) {
            solutions.push_back(assignment);
            return;
        }
        Int label = order[index];
        if (assignment.count(label)) {
            recurse(index + 1);
            return;
        }
        for (const LatticePoint& x : candidates.at(label)) {
            std::vector<Int> trail;
            if (force(x, trail)) recurse(index + 1);
            undo(trail);
        }
    }

    std::vector<std::map<Int, LatticePoint>> run() {
        prefilter();
        recurse(0);
        return std::move(solutions);
    }
};

Diagram make_diagram(Diagram::Kind kind, std::size_t dimension,
                     const std::map<Int, LatticePoint>& assignment,
                     const std::function<Int(const LatticePoint&)>& weight_of) {
    std::vector<std::pair<LatticePoint, Int>> rows;
    rows.reserve(assignment.size());
    for (const auto& [label, point] : assignment) rows.emplace_back(point, label);
    std::sort(rows.begin(), rows.end());
    Diagram d;
    d.kind = kind;
    d.dimension = dimension;
    for (auto& [point, label] : rows) {
        d.weights.push_back(weight_of(point));
        d.labels.push_back(label);
        d.points.push_back(std::move(point));
    }
    return d;
}

bool downward_closed(const std::vector<LatticePoint>& sorted_points) {
    std::set<LatticePoint> set(sorted_points.begin(), sorted_points.end());
    for (const LatticePoint& x : sorted_points) {
        for (std::size_t i = 0; i < x.dimension(); ++i) {
            if (x[i] == 0) continue;
            LatticePoint y = x;
            --y.coords[i];
            if (!set.count(y)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_mdd(const WeightedCayleyDigraph& G, const Diagram& D) {
    if (D.dimension != G.degree())
        throw std::invalid_argument("is_mdd: diagram dimension does not match digraph degree");
    if (D.points.size() != static_cast<std::size_t>(G.modulus())) return false;
    std::vector<char> seen(static_cast<std::size_t>(G.modulus()), 0);
    for (const LatticePoint& x : D.points) {
        Int c = G.class_of(x);
        if (seen[static_cast<std::size_t>(c)]) return false;
        seen[static_cast<std::size_t>(c)] = 1;
        if (G.weight_of(x) != G.class_min_weights()[static_cast<std::size_t>(c)]) return false;
    }
    return downward_closed(D.points);
}

bool is_lshape(const NumericalSemigroup& S, const std::vector<Int>& C, const Diagram& D) {
    if (D.dimension != S.embedding_dimension())
        throw std::invalid_argument("is_lshape: diagram dimension does not match semigroup");
    if (D.points.size() != C.size()) return false;
    std::vector<Int> sorted_c = C;
    std::sort(sorted_c.begin(), sorted_c.end());
    std::set<Int> hit;
    for (const LatticePoint& x : D.points) {
        Int element = dot(x, S.generators());
        if (!std::binary_search(sorted_c.begin(), sorted_c.end(), element)) return false;
        if (!hit.insert(element).second) return false;  // two factorizations of one element
    }
    return downward_closed(D.points);
}

bool is_face_connected(const Diagram& D) {
    if (D.points.empty()) return false;
    std::set<LatticePoint> set(D.points.begin(), D.points.end());
    std::set<LatticePoint> visited;
    std::queue<LatticePoint> queue;
    queue.push(D.points.front());
    visited.insert(D.points.front());
    while (!queue.empty()) {
        LatticePoint x = queue.front();
        queue.pop();
        for (std::size_t i = 0; i < x.dimension(); ++i) {
            for (Int delta : {Int{-1}, Int{1}}) {
                LatticePoint y = x;
                y.coords[i] += delta;
                if (y.coords[i] < 0) continue;
                if (set.count(y) && visited.insert(y).second) queue.push(y);
            }
        }
    }
    return visited.size() == set.size();
}

std::vector<Diagram> enumerate_mdds(const WeightedCayleyDigraph& G) {
    MinWeightTable table = min_weight_table(G);

    SdrSearch search;
    search.order.resize(static_cast<std::size_t>(G.modulus()));
    for (Int c = 0; c < G.modulus(); ++c) search.order[static_cast<std::size_t>(c)] = c;
    // Nondecreasing minimum weight, ties by residue: forced choices first.
    std::stable_sort(search.order.begin(), search.order.end(), [&](Int a, Int b) {
        return table.min_weight[static_cast<std::size_t>(a)] <
               table.min_weight[static_cast<std::size_t>(b)];
    });
    for (Int c = 0; c < G.modulus(); ++c)
        search.candidates[c] = table.candidates[static_cast<std::size_t>(c)];
    search.label_of = [&](const LatticePoint& y) -> std::optional<Int> {
        Int c = G.class_of(y);
        if (G.weight_of(y) != table.min_weight[static_cast<std::size_t>(c)]) return std::nullopt;
        return c;
    };

    std::vector<Diagram> result;
    for (const auto& assignment : search.run())
        result.push_back(make_diagram(Diagram::Kind::Mdd, G.degree(), assignment,
                                      [&](const LatticePoint& x) { return G.weight_of(x); }));
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Diagram> lshapes_closed(const NumericalSemigroup& S, const std::vector<Int>& C) {
    std::vector<Int> elements = C;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements.front() != 0)
        throw std::invalid_argument("lshapes_closed: closed set must contain 0");
    if (!S.is_closed(elements))
        throw std::invalid_argument("lshapes_closed: set is not closed under <=_S");

    SdrSearch search;
    search.order = elements;  // increasing element order
    for (Int c : elements) search.candidates[c] = factorizations(S, c);
    search.label_of = [&](const LatticePoint& y) -> std::optional<Int> {
        Int element = dot(y, S.generators());
        if (!std::binary_search(elements.begin(), elements.end(), element)) return std::nullopt;
        return element;
    };

    std::vector<Diagram> result;
    for (const auto& assignment : search.run())
        result.push_back(make_diagram(Diagram::Kind::LShape, S.embedding_dimension(), assignment,
                                      [&](const LatticePoint& x) { return dot(x, S.generators()); }));
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Diagram> lshapes_apery(const NumericalSemigroup& S, Int m) {
    const auto& gens = S.generators();
    if (std::find(gens.begin(), gens.end(), m) == gens.end())
        throw std::invalid_argument("lshapes_apery: modulus must be a minimal generator");
    return lshapes_closed(S, S.apery(m).table());
}

Diagram project_out(const Diagram& D, std::size_t coordinate) {
    Diagram out;
    out.kind = D.kind;
    out.dimension = D.dimension - 1;
    std::vector<std::pair<LatticePoint, std::pair<Int, Int>>> rows;
    for (std::size_t i = 0; i < D.points.size(); ++i) {
        LatticePoint p = D.points[i];
        p.coords.erase(p.coords.begin() + static_cast<std::ptrdiff_t>(coordinate));
        rows.push_back({std::move(p), {D.labels[i], D.weights[i]}});
    }
    std::sort(rows.begin(), rows.end());
    for (auto& [point, lw] : rows) {
        out.labels.push_back(lw.first);
        out.weights.push_back(lw.second);
        out.points.push_back(std::move(point));
    }
    return out;
}

}  // namespace lshapes
