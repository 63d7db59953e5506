#pragma once

#include <optional>

#include "ksp/species.hpp"

namespace ksp {

// Finite poset over canonical structures. leq is the full order relation
// (reflexive, antisymmetric, transitive; validated on construction).
struct Poset {
    std::vector<Structure> elems;
    std::vector<std::vector<char>> leq;
    std::optional<int> bottom;
    std::vector<int> maxima;  // declared maxima (the M[n] / N[n] / top assemblies)
    std::vector<int> rank;    // rank of each element when graded, else empty

    int size() const { return static_cast<int>(elems.size()); }
    bool le(int i, int j) const { return leq[i][j] != 0; }

    void validate() const;
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    std::vector<std::pair<int, int>> cover_relations() const;
};

// Subposet on the given element indices (order induced); indices keep the
// given order.
Poset subposet(const Poset& p, const std::vector<int>& idx);
// Closed interval [x, y].
Poset interval(const Poset& p, int x, int y);

// P_M[n]: all structures of M on subsets of {0..n-1} lying below some
// element of M[n]; m1 <= m2 iff m2 = nu(m1, m') for some m'.
// When weight_cap is set, maxima are the weight-k elements of M[n] and the
// poset is P_M^k[n] (union of their lower intervals).
Poset build_monoid_poset(const CMonoid& m, int n,
                         std::optional<int> weight_cap = std::nullopt);

// P_{M,N}[n]: an adjoined bottom plus the N-structures on subsets below some
// element of N[n]; order by the module action.
Poset build_module_poset(const CModule& mod, int n);

// P_C[n]: assemblies of operad structures over set partitions of {0..n-1}
// lying below some one-block assembly; a1 <= a2 iff a2 = eta-hat(a1, outer
// assembly). Assemblies are stored as sets of component structures.
Poset build_operad_poset(const COperad& op, int n);

// Mobius function mu(x, y) of a comparable pair.
Integer mobius(const Poset& p, int x, int y);

struct MobiusSpeciesReport {
    // per n: sum over maxima m of mu(bottom, m)
    std::vector<Integer> mobius_by_n;
    // per n: per cycle type, Mobius sum over the fixed subposet (character
    // data: |Fix P[n, sigma]|_mu), assembled into Ch Mob
    SymFn character;

    explicit MobiusSpeciesReport(int n_max) : character(n_max) {}
};

enum class PosetKind { monoid, module, operad };

MobiusSpeciesReport mobius_inverse_series(const CMonoid& m, int n_max,
                                          bool with_character = true);
MobiusSpeciesReport mobius_inverse_series(const CModule& mod, int n_max,
                                          bool with_character = true);
MobiusSpeciesReport mobius_inverse_series(const COperad& op, int n_max,
                                          bool with_character = true);

}  // namespace ksp
