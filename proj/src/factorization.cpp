#include "lshapes/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lshapes {

namespace {

void enumerate(const std::vector<Int>& gens, std::size_t index, Int remaining,
               LatticePoint& partial, std::vector<LatticePoint>& out) {
    if (index + 1 == gens.size()) {
        if (remaining % gens[index] == 0) {
            partial.coords[index] = remaining / gens[index];
            out.push_back(partial);
        }
        return;
    }
    for (Int c = remaining / gens[index]; c >= 0; --c) {
        partial.coords[index] = c;
        enumerate(gens, index + 1, remaining - c * gens[index], partial, out);
    }
    partial.coords[index] = 0;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

std::vector<LatticePoint> factorizations(const NumericalSemigroup& S, Int s) {
    if (s < 0) throw std::invalid_argument("factorizations: negative element");
    std::vector<LatticePoint> out;
    LatticePoint partial;
    partial.coords.assign(S.embedding_dimension(), 0);
    enumerate(S.generators(), 0, s, partial, out);
    std::sort(out.begin(), out.end());
    return out;
}

FactorizationGraph factorization_graph(const NumericalSemigroup& S, Int s) {
    if (!S.contains(s)) throw std::invalid_argument("factorization_graph: element not in semigroup");
    FactorizationGraph g;
    g.vertices = factorizations(S, s);
    const std::size_t n = g.vertices.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool overlap = false;
            for (std::size_t c = 0; c < S.embedding_dimension(); ++c)
                if (g.vertices[i][c] > 0 && g.vertices[j][c] > 0) {
                    overlap = true;
                    break;
                }
            if (overlap) {
                g.edges.emplace_back(i, j);
                parent[find_root(parent, i)] = find_root(parent, j);
            }
        }
    }
    g.component.assign(n, 0);
    std::vector<std::size_t> label(n, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find_root(parent, i);
        if (label[r] == static_cast<std::size_t>(-1)) label[r] = g.component_count++;
        g.component[i] = label[r];
    }
    return g;
}

std::vector<PresentationPair> minimal_presentation(const NumericalSemigroup& S) {
    // Safe search window for Betti elements at desk scale.
    const Int limit = S.frobenius() + S.multiplicity() + S.generators().back();
    std::vector<PresentationPair> result;
    for (Int s = 1; s <= limit; ++s) {
        if (!S.contains(s)) continue;
        FactorizationGraph g = factorization_graph(S, s);
        if (g.component_count < 2) continue;
        // Lexicographically smallest factorization per component; the
        // component of the overall smallest is the base.
        std::vector<const LatticePoint*> rep(g.component_count, nullptr);
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            const LatticePoint& v = g.vertices[i];
            const LatticePoint*& r = rep[g.component[i]];
            if (r == nullptr || v < *r) r = &v;
        }
        std::size_t base = g.component[0];  // vertices sorted, so 0 is lex-smallest
        for (std::size_t c = 0; c < g.component_count; ++c) {
            if (c == base) continue;
            LatticePoint a = *rep[base];
            LatticePoint b = *rep[c];
            for (std::size_t i = 0; i < a.coords.size(); ++i) {
                Int m = std::min(a.coords[i], b.coords[i]);
                a.coords[i] -= m;
                b.coords[i] -= m;
            }
            if (b < a) std::swap(a, b);
            result.push_back({std::move(a), std::move(b)});
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace lshapes
