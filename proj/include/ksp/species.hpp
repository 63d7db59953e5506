#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ksp/structure.hpp"
#include "ksp/symfun.hpp"

namespace ksp {

inline constexpr int kEnumerationGuard = 8;

// Labeled-structure enumerator; enumerate(U) returns the structures on the
// label set U (sorted vector of distinct labels) in canonical order.
struct Species {
    std::string name;
    std::function<std::vector<Structure>(const std::vector<int>&)> enumerate;

    std::vector<Structure> on_n(int n) const {
        std::vector<int> u(n);
        for (int i = 0; i < n; ++i) u[i] = i;
        return enumerate(u);
    }
};

// Cancellative monoid in species: associative product nu with unit the unique
// structure on the empty set, satisfying left cancellation.
struct CMonoid {
    std::string name;
    Species sp;
    std::function<Structure(const Structure&, const Structure&)> nu;
    int generator_card = 1;
    // quadratic-by-generators: structures on n labels sit in weight n/c
    bool quadratic = true;
    std::function<int(const Structure&)> weight;

    Structure unit() const {
        auto u = sp.enumerate({});
        if (u.size() != 1) throw error("cmonoid: unit must be unique on {}");
        return u[0];
    }
};

// Right module N over a c-monoid M with cancellative action tau.
struct CModule {
    std::string name;
    CMonoid base;
    Species sp;  // N, with N[empty] = empty
    std::function<Structure(const Structure&, const Structure&)> tau;
    std::function<int(const Structure&)> weight;
};

// c-operad: composition eta(outer, blocks) where outer is a structure on the
// block representatives (minimum label of each block) and blocks maps each
// representative to the structure on its block.
struct COperad {
    std::string name;
    Species sp;
    std::function<Structure(const Structure&, const std::map<int, Structure>&)>
        eta;
    std::function<int(const Structure&)> weight;
};

// --- enumeration helpers -------------------------------------------------

std::vector<std::vector<int>> subsets_of(const std::vector<int>& u);
std::vector<std::vector<std::vector<int>>> set_partitions_of(
    const std::vector<int>& u);
std::vector<int> set_difference(const std::vector<int>& u,
                                const std::vector<int>& v);

// --- species builders ----------------------------------------------------

Species sp_X();
Species sp_E();
Species sp_E_exactly(int k);   // E_k
Species sp_E_atleast(int j);   // E_{j+}
Species sp_E_divisible(int k); // E_(k): sets of size divisible by k
Species sp_Cosh();             // = E_(2)
Species sp_Sinh();             // odd-size sets
Species sp_L();
Species sp_pointed();          // E-bullet: (point, set)
Species sp_A();                // labeled rooted trees
// Enriched rooted trees: an M-structure on each vertex's set of children.
Species sp_A_M(const CMonoid& m);
// X.M: a root atom plus an M-structure on the rest.
Species sp_T_M(const CMonoid& m);
// Sequences of nonempty M-structures (the monoid L(M+) of Theorem main).
CMonoid mon_L_of_plus(const CMonoid& m);

// --- monoid / module / operad builders -----------------------------------

CMonoid mon_E();
CMonoid mon_L();
CMonoid mon_E_divisible(int k);  // Cosh for k = 2
CMonoid mon_Cosh();
CMonoid segre(const CMonoid& a, const CMonoid& b);
CMonoid mon_EsegreE();
CMonoid mon_Lib(int k, int n);  // n-fold Segre of E_(k)
CMonoid veronese(const CMonoid& m, int k);

CModule mod_Sinh();                    // Sinh over Cosh
CModule mod_E_atleast(int j);          // E_{j+} over E
CModule truncate_module(const CMonoid& m, int l);  // M^[l] over M

COperad op_Com();      // E_+
COperad op_pointed();  // E-bullet
COperad op_A();        // rooted trees under grafting

// --- checks and characters -----------------------------------------------

struct AxiomReport {
    bool pass = true;
    std::vector<std::string> failures;  // axiom name + witness

    void fail(const std::string& what) {
        pass = false;
        failures.push_back(what);
    }
};

AxiomReport check_axioms(const CMonoid& m, int n_max);
AxiomReport check_axioms(const CModule& mod, int n_max);
AxiomReport check_axioms(const COperad& op, int n_max);

// Canonical permutation of cycle type alpha on {0..n-1}: consecutive cycles.
std::map<int, int> perm_of_type(const IntPartition& alpha);

SymFn cycle_index(const Species& s, int n_max);

Egf species_egf(const Species& s, int n_max);

}  // namespace ksp
