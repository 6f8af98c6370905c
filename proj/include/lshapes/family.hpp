#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lshapes/cayley.hpp"
#include "lshapes/diagram.hpp"
#include "lshapes/semigroup.hpp"

namespace lshapes {

/// The embedding-dimension-4 family: for odd n >= 5,
/// T = <n, 3n-2, 3n-1> and S = T together with the Frobenius number of T.
/// The number of L-shapes of Ap(S, F(T)) grows as (n+3)/2.
struct FamilyInstance {
    Int n;
    NumericalSemigroup T;  // <n, 3n-2, 3n-1>
    Int frob_t;            // F(T) = (3n-7)n/2 + 2
    NumericalSemigroup S;  // <n, 3n-2, 3n-1, F(T)>
};

/// Builds the instance and verifies every closed form against the generic
/// machinery (Frobenius, pseudo-Frobenius, max Apery element). Throws
/// std::invalid_argument for even or small n, std::runtime_error when a
/// closed form and the generic computation disagree.
FamilyInstance build_family(Int n);

/// The unique factorization (x, y, z) of an Ap(S, F(T)) element over the
/// generators of T with z < 2, y < (n+1)/2 and x < (3n-1)/2.
LatticePoint normal_form(const FamilyInstance& inst, Int s);

/// The explicit four-box region F; equals { normal_form(s) } over the whole
/// Apery set and has F(T) elements.
std::vector<LatticePoint> f_region(const FamilyInstance& inst);

/// M_i = elements of Ap(S, F(T)) with exactly i factorizations, brute force,
/// cross-checked against the symbolic characterization of the normal forms.
std::map<Int, std::vector<Int>> classify_mi(const FamilyInstance& inst);

/// The two minimal normal forms of M_i, 2 <= i <= (n-1)/2:
/// ((3n-5)/2, i-2, 1) and (3(i-1), i-1, 0). Verified minimal.
std::pair<LatticePoint, LatticePoint> minimal_nf(const FamilyInstance& inst, Int i);

/// The elements of the two-element set controlling M_i:
/// s_i = (3n-5)/2 n + (i-2)(3n-2) + 3n-1 and s'_i = 3(i-1)n + (i-1)(3n-2).
std::pair<Int, Int> control_elements(const FamilyInstance& inst, Int i);

/// The explicit (n+3)/2 L-shapes of Ap(S, F(T)), built from the case-by-case
/// choice sequences and completed by translating the chosen factorization of
/// each minimal element. Every diagram is verified before being returned.
std::vector<Diagram> construct_lshape_family(const FamilyInstance& inst);

/// The degree-3 digraph family with 3(t+2) MDDs in the unit-weight version:
/// with m = 2 + t + t^2, C(m(m-1); 1+m, 1+mt, 1+mt^2) with unit weights, or
/// weights equal to the steps when `weighted` is set. t must not be a
/// multiple of 3.
WeightedCayleyDigraph sabariego_santos(Int t, bool weighted);

/// C(F(T); n, 3n-2, 3n-1; n, 3n-2, 3n-1): the digraph whose MDD count equals
/// the L-shape count (n+3)/2 of the instance.
WeightedCayleyDigraph family_digraph(const FamilyInstance& inst);

/// Closed-form pseudo-Frobenius numbers of S,
/// {(3n^2-13n+8)/2, (3n^2-9n+4)/2, (3n^2-7n+2)/2}, verified by brute force.
std::vector<Int> pf_family(const FamilyInstance& inst);

}  // namespace lshapes
