#pragma once

#include <vector>

#include "lshapes/lattice.hpp"

namespace lshapes {

/// Per residue class of Z_N: the minimum weight over all lattice points
/// hitting that class, together with every point attaining it.
struct MinWeightTable {
    std::vector<Int> min_weight;                      // indexed by residue
    std::vector<std::vector<LatticePoint>> candidates;  // indexed by residue, sorted
};

/// Weighted Cayley digraph C(N; s_1..s_k; p_1..p_k) on Z_N: arcs
/// m -> m + s_i of weight p_i. Requires gcd(N, s_1, ..., s_k) = 1,
/// distinct nonzero steps mod N and positive weights.
class WeightedCayleyDigraph {
  public:
    WeightedCayleyDigraph(Int modulus, std::vector<Int> steps, std::vector<Int> weights);

    Int modulus() const { return modulus_; }
    const std::vector<Int>& steps() const { return steps_; }
    const std::vector<Int>& weights() const { return weights_; }
    std::size_t degree() const { return steps_.size(); }

    /// Weight of a minimum path from u to v. Translation invariant.
    Int distance(Int u, Int v) const;

    /// Maximum distance between any pair of vertices.
    Int diameter() const;

    /// Minimum weight reaching each class (shortest paths from 0).
    const std::vector<Int>& class_min_weights() const { return dist_; }

    Int class_of(const LatticePoint& x) const { return dot(x, steps_) % modulus_; }
    Int weight_of(const LatticePoint& x) const { return dot(x, weights_); }

  private:
    Int modulus_;
    std::vector<Int> steps_;
    std::vector<Int> weights_;
    std::vector<Int> dist_;  // distance(0, v) for every v
};

/// Full minimum-weight table: weights from the shortest-path sweep,
/// candidates by bounded box enumeration with weight pruning.
MinWeightTable min_weight_table(const WeightedCayleyDigraph& G);

}  // namespace lshapes
