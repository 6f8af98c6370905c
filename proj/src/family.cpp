#include "lshapes/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "lshapes/factorization.hpp"

namespace lshapes {

namespace {

void check(bool condition, const std::string& what) {
    if (!condition) throw std::runtime_error("family verification failed: " + what);
}

bool in_f_region(const LatticePoint& p, Int n) {
    Int x = p[0], y = p[1], z = p[2];
    if (z == 0) {
        if (x <= (3 * n - 3) / 2 && y <= (n - 3) / 2) return true;   // F_1
        if (x <= 1 && y == (n - 1) / 2) return true;                 // F_2
    } else if (z == 1) {
        if (x <= (3 * n - 3) / 2 && y <= (n - 7) / 2) return true;   // F_3
        if (x <= (3 * n - 5) / 2 && y == (n - 5) / 2) return true;   // F_4
    }
    return false;
}

// Number of factorizations an Apery element must have, read off from its
// normal form (the case analysis on which relations still apply).
Int symbolic_factorization_count(const LatticePoint& nf, Int n) {
    Int x = nf[0], y = nf[1], z = nf[2];
    // Single factorization: nothing in the minimal presentation applies.
    if (y == 0 && z == 0 && x <= (3 * n - 3) / 2) return 1;
    if (y == 0 && z == 1 && x <= (3 * n - 7) / 2) return 1;
    if (x == 2 && z == 0 && y >= 1 && y <= (n - 3) / 2) return 1;
    if (x <= 1 && z == 0 && y >= 1 && y <= (n - 1) / 2) return 1;
    if (x <= 2 && z == 1 && y >= 1 && y <= (n - 5) / 2) return 1;
    for (Int i = 2; i <= (n - 1) / 2; ++i) {
        if (y == i - 2 && z == 1 && x >= (3 * n - 5) / 2 && x <= (3 * n - 3) / 2) return i;
        if (y == i - 1 && z == 0 && x >= 3 * (i - 1) && x <= (3 * n - 3) / 2) return i;
        if (y == i - 1 && z == 1 && x >= 3 * (i - 1) && x <= (3 * n - 7) / 2) return i;
        if (y >= i && y <= (n - 3) / 2 && z == 0 && x >= 3 * (i - 1) && x <= 3 * i - 1) return i;
        if (y >= i && y <= (n - 5) / 2 && z == 1 && x >= 3 * (i - 1) && x <= 3 * i - 1) return i;
    }
    return 0;
}

}  // namespace

FamilyInstance build_family(Int n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("family parameter must be an odd integer >= 5");
    NumericalSemigroup t({n, 3 * n - 2, 3 * n - 1});
    Int frob_t = (3 * n - 7) * n / 2 + 2;
    check(t.frobenius() == frob_t, "F(T) closed form");
    check(t.pseudo_frobenius() == std::vector<Int>{frob_t - 1, frob_t}, "PF(T) closed form");
    NumericalSemigroup s({n, 3 * n - 2, 3 * n - 1, frob_t});
    check(s.frobenius() == frob_t - 1, "F(S) = F(T) - 1");
    check(s.apery(frob_t).max() == n * (3 * n - 7) + 3, "max Ap(S, F(T)) closed form");
    return FamilyInstance{n, std::move(t), frob_t, std::move(s)};
}

LatticePoint normal_form(const FamilyInstance& inst, Int s) {
    if (!inst.S.contains(s) || inst.S.contains(s - inst.frob_t))
        throw std::invalid_argument("normal_form: element outside Ap(S, F(T))");
    const Int n = inst.n;
    LatticePoint found;
    bool have = false;
    for (const LatticePoint& f : factorizations(inst.T, s)) {
        if (f[2] < 2 && 2 * f[1] < n + 1 && 2 * f[0] < 3 * n - 1) {
            check(!have, "normal form must be unique");
            found = f;
            have = true;
        }
    }
    check(have, "normal form must exist");
    return found;
}

std::vector<LatticePoint> f_region(const FamilyInstance& inst) {
    const Int n = inst.n;
    std::set<LatticePoint> region;
    for (Int x = 0; x <= (3 * n - 3) / 2; ++x)
        for (Int y = 0; y <= (n - 3) / 2; ++y) region.insert(LatticePoint{x, y, 0});
    for (Int x = 0; x <= 1; ++x) region.insert(LatticePoint{x, (n - 1) / 2, 0});
    for (Int x = 0; x <= (3 * n - 3) / 2; ++x)
        for (Int y = 0; y <= (n - 7) / 2; ++y) region.insert(LatticePoint{x, y, 1});
    if (n >= 5)
        for (Int x = 0; x <= (3 * n - 5) / 2; ++x) region.insert(LatticePoint{x, (n - 5) / 2, 1});

    check(static_cast<Int>(region.size()) == inst.frob_t, "|F| = F(T)");
    std::set<LatticePoint> images;
    for (Int s : inst.S.apery(inst.frob_t).table()) images.insert(normal_form(inst, s));
    check(images == region, "nf is a bijection onto F");
    return {region.begin(), region.end()};
}

std::map<Int, std::vector<Int>> classify_mi(const FamilyInstance& inst) {
    std::map<Int, std::vector<Int>> mi;
    for (Int s : inst.S.apery(inst.frob_t).table()) {
        Int count = static_cast<Int>(factorizations(inst.T, s).size());
        mi[count].push_back(s);
        check(symbolic_factorization_count(normal_form(inst, s), inst.n) == count,
              "symbolic M_i characterization vs brute force");
    }
    for (auto& [i, elems] : mi) std::sort(elems.begin(), elems.end());
    return mi;
}

std::pair<LatticePoint, LatticePoint> minimal_nf(const FamilyInstance& inst, Int i) {
    const Int n = inst.n;
    if (i < 2 || i > (n - 1) / 2)
        throw std::invalid_argument("minimal_nf: index out of range [2, (n-1)/2]");
    LatticePoint a{(3 * n - 5) / 2, i - 2, 1};
    LatticePoint b{3 * (i - 1), i - 1, 0};

    // Confirm these are exactly the minimal normal forms of M_i.
    std::vector<LatticePoint> nfs;
    const auto mi = classify_mi(inst);
    for (Int s : mi.at(i)) nfs.push_back(normal_form(inst, s));
    std::set<LatticePoint> minimals;
    for (const LatticePoint& p : nfs) {
        bool minimal = true;
        for (const LatticePoint& q : nfs)
            if (!(q == p) && componentwise_leq(q, p)) {
                minimal = false;
                break;
            }
        if (minimal) minimals.insert(p);
    }
    check(minimals == std::set<LatticePoint>{a, b}, "minimal normal forms of M_i");
    return {a, b};
}

std::pair<Int, Int> control_elements(const FamilyInstance& inst, Int i) {
    const Int n = inst.n;
    Int s_i = (3 * n - 5) / 2 * n + (i - 2) * (3 * n - 2) + 3 * n - 1;
    Int s_prime_i = 3 * (i - 1) * n + (i - 1) * (3 * n - 2);
    return {s_i, s_prime_i};
}

std::vector<Diagram> construct_lshape_family(const FamilyInstance& inst) {
    const Int n = inst.n;
    const Int q = (n - 1) / 2;

    // Choice sequences for s_i and s'_i, i in 2..q. Everything else is
    // determined by translating the choice at the minimal element.
    std::vector<std::map<Int, LatticePoint>> choice_sets;
    auto seq_s = [&](Int i) { return LatticePoint{0, (n - 3) / 2 + i, 0}; };
    auto col_s = [&](Int i) { return LatticePoint{(3 * n - 5) / 2, i - 2, 1}; };
    auto diag_s = [&](Int i) { return LatticePoint{(3 * n - 5) / 2 - 3 * (i - 2), 0, 2 * (i - 2) + 1}; };
    auto prime_z = [&](Int i) { return LatticePoint{0, 0, 2 * (i - 1)}; };
    auto prime_x = [&](Int i) { return LatticePoint{3 * (i - 1), i - 1, 0}; };

    for (int variant = 0; variant < 3; ++variant) {
        std::map<Int, LatticePoint> choice;
        for (Int i = 2; i <= q; ++i) {
            auto [s_i, sp_i] = control_elements(inst, i);
            switch (variant) {
                case 0: choice[s_i] = seq_s(i); choice[sp_i] = prime_z(i); break;
                case 1: choice[s_i] = seq_s(i); choice[sp_i] = prime_x(i); break;
                case 2: choice[s_i] = col_s(i); choice[sp_i] = prime_x(i); break;
            }
        }
        choice_sets.push_back(std::move(choice));
    }
    for (Int j = 0; j <= (n - 5) / 2; ++j) {
        std::map<Int, LatticePoint> choice;
        for (Int i = 2; i <= q; ++i) {
            auto [s_i, sp_i] = control_elements(inst, i);
            choice[s_i] = i >= q - j ? diag_s(i) : seq_s(i);
            choice[sp_i] = prime_z(i);
        }
        choice_sets.push_back(std::move(choice));
    }

    const std::vector<Int> apery = inst.S.apery(inst.frob_t).table();
    std::map<Int, LatticePoint> nf;
    std::map<Int, Int> fact_count;
    for (Int s : apery) {
        nf[s] = normal_form(inst, s);
        fact_count[s] = static_cast<Int>(factorizations(inst.T, s).size());
    }

    std::set<Diagram> result;
    for (const auto& choice : choice_sets) {
        std::map<Int, LatticePoint> rep;
        for (Int s : apery) {
            if (fact_count[s] == 1) {
                rep[s] = nf[s];
                continue;
            }
            auto chosen = choice.find(s);
            if (chosen != choice.end()) {
                rep[s] = chosen->second;
                continue;
            }
            // Translate the choice made at a minimal element of M_i below s.
            auto [e1, e2] = control_elements(inst, fact_count[s]);
            bool have = false;
            LatticePoint forced;
            for (Int m : {e1, e2}) {
                if (!componentwise_leq(nf[m], nf[s])) continue;
                LatticePoint f = choice.at(m) + (nf[s] - nf[m]);
                check(!have || f == forced, "conflicting forced factorizations");
                forced = f;
                have = true;
            }
            check(have, "every non-minimal element must dominate a minimal one");
            check(dot(forced, inst.T.generators()) == s, "forced point factors the element");
            rep[s] = forced;
        }

        Diagram d;
        d.kind = Diagram::Kind::LShape;
        d.dimension = 4;
        std::vector<std::pair<LatticePoint, Int>> rows;
        for (const auto& [s, p] : rep) {
            LatticePoint full = p;
            full.coords.push_back(0);  // the F(T) coordinate vanishes on the Apery set
            rows.emplace_back(std::move(full), s);
        }
        std::sort(rows.begin(), rows.end());
        for (auto& [p, s] : rows) {
            d.labels.push_back(s);
            d.weights.push_back(s);
            d.points.push_back(std::move(p));
        }
        check(is_lshape(inst.S, apery, d), "constructed diagram fails (C1)/(C2)");
        result.insert(std::move(d));
    }
    check(static_cast<Int>(result.size()) == (n + 3) / 2, "L-shape family count (n+3)/2");
    return {result.begin(), result.end()};
}

WeightedCayleyDigraph sabariego_santos(Int t, bool weighted) {
    if (t < 1 || t % 3 == 0)
        throw std::invalid_argument("sabariego_santos: t must be positive and not divisible by 3");
    Int m = 2 + t + t * t;
    std::vector<Int> steps{1 + m, 1 + m * t, 1 + m * t * t};
    std::vector<Int> weights = weighted ? steps : std::vector<Int>{1, 1, 1};
    return WeightedCayleyDigraph(m * (m - 1), std::move(steps), std::move(weights));
}

WeightedCayleyDigraph family_digraph(const FamilyInstance& inst) {
    const Int n = inst.n;
    std::vector<Int> gens{n, 3 * n - 2, 3 * n - 1};
    return WeightedCayleyDigraph(inst.frob_t, gens, gens);
}

std::vector<Int> pf_family(const FamilyInstance& inst) {
    const Int n = inst.n;
    std::vector<Int> formula{(3 * n * n - 13 * n + 8) / 2, (3 * n * n - 9 * n + 4) / 2,
                             (3 * n * n - 7 * n + 2) / 2};
    std::sort(formula.begin(), formula.end());
    check(formula == inst.S.pseudo_frobenius(), "PF(S) closed form vs brute force");
    return formula;
}

}  // namespace lshapes
