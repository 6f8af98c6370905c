#include "lshapes/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace lshapes {

namespace {

// Least element of the monoid generated by `gens` in every residue class
// mod m, via a label-setting sweep over Z_m with one arc of weight g per
// generator g. gcd(gens) = 1 guarantees every class is reached.
std::vector<Int> least_in_class(Int m, const std::vector<Int>& gens) {
    const Int kInf = -1;
    std::vector<Int> dist(static_cast<std::size_t>(m), kInf);
    using Entry = std::pair<Int, Int>;  // (value, residue)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[0] = 0;
    queue.push({0, 0});
    while (!queue.empty()) {
        auto [v, r] = queue.top();
        queue.pop();
        if (dist[static_cast<std::size_t>(r)] != v) continue;
        for (Int g : gens) {
            Int nr = (r + g) % m;
            Int nv = v + g;
            Int& slot = dist[static_cast<std::size_t>(nr)];
            if (slot == kInf || nv < slot) {
                slot = nv;
                queue.push({nv, nr});
            }
        }
    }
    return dist;
}

// Is x a nonnegative integer combination of `gens`? Bounded DP; used only
// during construction, before the Apery table exists.
bool representable(Int x, const std::vector<Int>& gens) {
    if (x < 0) return false;
    std::vector<char> hit(static_cast<std::size_t>(x) + 1, 0);
    hit[0] = 1;
    for (Int v = 1; v <= x; ++v)
        for (Int g : gens)
            if (g <= v && hit[static_cast<std::size_t>(v - g)]) {
                hit[static_cast<std::size_t>(v)] = 1;
                break;
            }
    return hit[static_cast<std::size_t>(x)] != 0;
}

}  // namespace

AperySet::AperySet(Int modulus, std::vector<Int> table)
    : modulus_(modulus), table_(std::move(table)) {
    if (modulus_ <= 0 || table_.size() != static_cast<std::size_t>(modulus_))
        throw std::invalid_argument("Apery table must have exactly one entry per residue");
    if (table_[0] != 0) throw std::invalid_argument("Apery set must contain 0");
    for (Int i = 0; i < modulus_; ++i)
        if (table_[static_cast<std::size_t>(i)] % modulus_ != i)
            throw std::invalid_argument("Apery entry in wrong residue class");
}

Int AperySet::max() const { return *std::max_element(table_.begin(), table_.end()); }

NumericalSemigroup::NumericalSemigroup(std::vector<Int> generators)
    : generators_(std::move(generators)) {
    if (generators_.empty()) throw std::invalid_argument("generator list is empty");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] <= 0) throw std::invalid_argument("generators must be positive");
        if (i > 0 && generators_[i] <= generators_[i - 1])
            throw std::invalid_argument("generators must be strictly increasing");
    }
    Int g = 0;
    for (Int v : generators_) g = std::gcd(g, v);
    if (g != 1) throw std::invalid_argument("generators must have gcd 1");
    // Minimality: no generator may lie in the monoid spanned by the others.
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        std::vector<Int> others;
        for (std::size_t j = 0; j < generators_.size(); ++j)
            if (j != i) others.push_back(generators_[j]);
        if (!others.empty() && representable(generators_[i], others))
            throw std::invalid_argument("generator " + std::to_string(generators_[i]) +
                                        " is redundant: not a minimal generating system");
    }
    apery_multiplicity_ = least_in_class(multiplicity(), generators_);
}

bool NumericalSemigroup::contains(Int x) const {
    if (x < 0) return false;
    return x >= apery_multiplicity_[static_cast<std::size_t>(x % multiplicity())];
}

AperySet NumericalSemigroup::apery(Int m) const {
    if (m <= 0 || !contains(m))
        throw std::invalid_argument("Apery modulus must be a nonzero element of the semigroup");
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->tables.find(m);
        if (it != cache_->tables.end()) return AperySet(m, it->second);
    }
    std::vector<Int> table = least_in_class(m, generators_);
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        cache_->tables.emplace(m, table);
    }
    return AperySet(m, std::move(table));
}

Int NumericalSemigroup::frobenius() const {
    Int max = *std::max_element(apery_multiplicity_.begin(), apery_multiplicity_.end());
    return max - multiplicity();
}

std::vector<Int> NumericalSemigroup::pseudo_frobenius() const {
    Int f = frobenius();
    if (f < 0) return {-1};  // S = N: the lone pseudo-Frobenius number is -1
    std::vector<Int> result;
    for (Int z = 0; z <= f; ++z) {
        if (contains(z)) continue;
        bool ok = true;
        for (Int g : generators_)
            if (!contains(z + g)) {
                ok = false;
                break;
            }
        if (ok) result.push_back(z);
    }
    return result;
}

bool NumericalSemigroup::is_closed(const std::vector<Int>& elements) const {
    for (Int a : elements)
        if (!contains(a)) throw std::invalid_argument("closed-set element outside the semigroup");
    std::vector<Int> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    for (Int a : sorted) {
        for (Int b = 0; b <= a; ++b) {
            if (!contains(b) || !contains(a - b)) continue;
            if (!std::binary_search(sorted.begin(), sorted.end(), b)) return false;
        }
    }
    return true;
}

}  // namespace lshapes
