#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "lshapes/lattice.hpp"

namespace lshapes {

/// Apery set of a nonzero element m of a numerical semigroup: for every
/// residue i mod m, the least semigroup element congruent to i.
class AperySet {
  public:
    AperySet(Int modulus, std::vector<Int> table);

    Int modulus() const { return modulus_; }
    /// w_i, the least element of S congruent to residue mod modulus().
    Int operator[](Int residue) const { return table_[static_cast<std::size_t>(residue)]; }
    const std::vector<Int>& table() const& { return table_; }
    // On a temporary (e.g. `s.apery(m).table()` in a range-for) hand the
    // table out by value so it outlives the AperySet it came from.
    std::vector<Int> table() && { return std::move(table_); }
    Int max() const;

  private:
    Int modulus_;
    std::vector<Int> table_;
};

/// Numerical semigroup given by a minimal system of generators with gcd 1.
///
/// Construction rejects non-coprime, non-increasing, and non-minimal
/// generator lists: the embedding dimension must equal the number of
/// generators supplied. Values are immutable after construction; membership
/// resolves in O(1) through the Apery set of the multiplicity, which is
/// filled in at construction time.
class NumericalSemigroup {
  public:
    explicit NumericalSemigroup(std::vector<Int> generators);

    const std::vector<Int>& generators() const { return generators_; }
    std::size_t embedding_dimension() const { return generators_.size(); }
    Int multiplicity() const { return generators_.front(); }

    /// True iff x is a nonnegative integer combination of the generators.
    bool contains(Int x) const;

    /// Apery set of m; m must be a nonzero element of the semigroup.
    AperySet apery(Int m) const;

    /// Largest integer not in the semigroup; -1 when the semigroup is N.
    Int frobenius() const;

    /// All z not in S with z + s in S for every nonzero s in S, ascending.
    std::vector<Int> pseudo_frobenius() const;

    /// True iff C is closed under <=_S: a in C and b <=_S a imply b in C.
    /// Every element of C must belong to the semigroup.
    bool is_closed(const std::vector<Int>& elements) const;

  private:
    struct AperyCache {
        std::mutex mutex;
        std::map<Int, std::vector<Int>> tables;
    };

    std::vector<Int> generators_;
    std::vector<Int> apery_multiplicity_;  // residue -> least element, mod n_1
    std::unique_ptr<AperyCache> cache_ = std::make_unique<AperyCache>();
};

}  // namespace lshapes
