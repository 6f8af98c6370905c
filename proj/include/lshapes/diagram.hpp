#pragma once

#include <vector>

#include "lshapes/cayley.hpp"
#include "lshapes/lattice.hpp"
#include "lshapes/semigroup.hpp"

namespace lshapes {

/// A minimum distance diagram or an L-shape: a downward-closed set of
/// lattice points in bijection with a label set (residues mod N for a
/// digraph, semigroup elements for a closed set).
struct Diagram {
    enum class Kind { Mdd, LShape };

    Kind kind = Kind::Mdd;
    std::size_t dimension = 0;
    std::vector<LatticePoint> points;  // sorted lexicographically
    std::vector<Int> labels;           // aligned with points
    std::vector<Int> weights;          // aligned with points

    /// Canonical identity is the sorted coordinate list.
    bool operator==(const Diagram& o) const { return points == o.points; }
    bool operator<(const Diagram& o) const { return points < o.points; }
};

/// Conditions (1) and (2): N cubes, one per residue class, each of minimum
/// weight in its class, and downward closure. Verification path independent
/// of the enumeration engine.
bool is_mdd(const WeightedCayleyDigraph& G, const Diagram& D);

/// Conditions (C1) and (C2): exactly one factorization per element of the
/// closed set C, and downward closure.
bool is_lshape(const NumericalSemigroup& S, const std::vector<Int>& C, const Diagram& D);

/// Cube adjacency (shared facet) connectivity; implied by downward closure,
/// checked explicitly as a regression guard.
bool is_face_connected(const Diagram& D);

/// All minimum distance diagrams of G, duplicate-free, canonically ordered.
std::vector<Diagram> enumerate_mdds(const WeightedCayleyDigraph& G);

/// All L-shapes of the finite closed set C (which must contain 0).
std::vector<Diagram> lshapes_closed(const NumericalSemigroup& S, const std::vector<Int>& C);

/// L-shapes of Ap(S, m) for a minimal generator m. Diagrams keep all k
/// coordinates; the coordinate of m is identically zero.
std::vector<Diagram> lshapes_apery(const NumericalSemigroup& S, Int m);

/// Drop one coordinate from every point (used to relate the Apery-set view
/// to the digraph view, where the modulus generator has no axis).
Diagram project_out(const Diagram& D, std::size_t coordinate);

}  // namespace lshapes
