#include "lshapes/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace lshapes {

WeightedCayleyDigraph::WeightedCayleyDigraph(Int modulus, std::vector<Int> steps,
                                             std::vector<Int> weights)
    : modulus_(modulus), steps_(std::move(steps)), weights_(std::move(weights)) {
    if (modulus_ < 1) throw std::invalid_argument("modulus must be >= 1");
    if (steps_.empty() || steps_.size() != weights_.size())
        throw std::invalid_argument("steps and weights must be nonempty lists of equal length");
    Int g = modulus_;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        steps_[i] %= modulus_;
        if (steps_[i] < 0) steps_[i] += modulus_;
        if (steps_[i] == 0 && modulus_ > 1)
            throw std::invalid_argument("steps must be nonzero mod N");
        if (weights_[i] < 1) throw std::invalid_argument("weights must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if (steps_[j] == steps_[i] && modulus_ > 1)
                throw std::invalid_argument("steps must be distinct mod N");
        g = std::gcd(g, steps_[i]);
    }
    if (g != 1) throw std::invalid_argument("gcd(N, steps) must be 1");

    // Label-setting sweep from vertex 0; weights are positive integers.
    const Int kInf = -1;
    dist_.assign(static_cast<std::size_t>(modulus_), kInf);
    using Entry = std::pair<Int, Int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist_[0] = 0;
    queue.push({0, 0});
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (dist_[static_cast<std::size_t>(v)] != d) continue;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            Int nv = (v + steps_[i]) % modulus_;
            Int nd = d + weights_[i];
            Int& slot = dist_[static_cast<std::size_t>(nv)];
            if (slot == kInf || nd < slot) {
                slot = nd;
                queue.push({nd, nv});
            }
        }
    }
}

Int WeightedCayleyDigraph::distance(Int u, Int v) const {
    Int d = ((v - u) % modulus_ + modulus_) % modulus_;
    return dist_[static_cast<std::size_t>(d)];
}

Int WeightedCayleyDigraph::diameter() const {
    return *std::max_element(dist_.begin(), dist_.end());
}

namespace {

void collect_candidates(const WeightedCayleyDigraph& G, std::size_t index, Int weight_budget,
                        LatticePoint& partial, MinWeightTable& table) {
    if (index == G.degree()) {
        Int c = G.class_of(partial);
        if (G.weight_of(partial) == table.min_weight[static_cast<std::size_t>(c)])
            table.candidates[static_cast<std::size_t>(c)].push_back(partial);
        return;
    }
    Int p = G.weights()[index];
    for (Int v = 0; v * p <= weight_budget; ++v) {
        partial.coords[index] = v;
        collect_candidates(G, index + 1, weight_budget - v * p, partial, table);
    }
    partial.coords[index] = 0;
}

}  // namespace

MinWeightTable min_weight_table(const WeightedCayleyDigraph& G) {
    MinWeightTable table;
    table.min_weight = G.class_min_weights();
    table.candidates.assign(static_cast<std::size_t>(G.modulus()), {});
    Int max_weight = *std::max_element(table.min_weight.begin(), table.min_weight.end());
    LatticePoint partial;
    partial.coords.assign(G.degree(), 0);
    collect_candidates(G, 0, max_weight, partial, table);
    for (auto& cands : table.candidates) std::sort(cands.begin(), cands.end());
    return table;
}

}  // namespace lshapes
