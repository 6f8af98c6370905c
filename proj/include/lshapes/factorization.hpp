#pragma once

#include <utility>
#include <vector>

#include "lshapes/lattice.hpp"
#include "lshapes/semigroup.hpp"

namespace lshapes {

/// A relation between two distinct factorizations of the same element,
/// stored in reduced form (componentwise minimum subtracted) with the
/// lexicographically smaller side on the left.
struct PresentationPair {
    LatticePoint left;
    LatticePoint right;

    bool operator==(const PresentationPair& o) const {
        return left == o.left && right == o.right;
    }
    bool operator<(const PresentationPair& o) const {
        return left < o.left || (left == o.left && right < o.right);
    }
};

/// The set Z(s) of factorizations of s over the generators of S,
/// sorted lexicographically. Empty iff s is not in S. s must be >= 0.
std::vector<LatticePoint> factorizations(const NumericalSemigroup& S, Int s);

/// Graph on Z(s) joining factorizations with overlapping support.
/// s must belong to S.
struct FactorizationGraph {
    std::vector<LatticePoint> vertices;  // Z(s), sorted
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> component;  // vertex -> component id
    std::size_t component_count = 0;
};

FactorizationGraph factorization_graph(const NumericalSemigroup& S, Int s);

/// Minimal presentation of S: for every element whose factorization graph is
/// disconnected, one pair per non-base connected component, linking the
/// lexicographically smallest factorization of that component to the one of
/// the base component. Pairs are reduced and canonically ordered.
std::vector<PresentationPair> minimal_presentation(const NumericalSemigroup& S);

}  // namespace lshapes
