#pragma once

#include "ksp/homology.hpp"
#include "ksp/poset.hpp"

namespace ksp {

// Bar complex of a quadratic c-monoid, realized as the chain complex of the
// truncated poset P_M^k[n].  Under left cancellation the length-r chains
// 0 < m_1 < nu(m_1,m_2) < ... < m are in bijection with the length-r
// factorizations m = nu(m_1, nu(m_2, ...)) into nonempty factors, so
// factorization_counts[r] must equal complex.dim(r).
struct BarComplexView {
    std::string monoid;
    int n = 0;
    int k = 0;
    Poset poset;  // P_M^k[n]
    ChainComplex complex;
    std::vector<Integer> factorization_counts;  // by chain length r
    std::vector<long> homology;
};

BarComplexView bar_complex(const CMonoid& m, int n, int k);

// Number of ordered factorizations of `target` (a structure on `support`)
// into r nu-factors on nonempty subsets.
Integer count_factorizations(const CMonoid& m, const Structure& target,
                             const std::vector<int>& support, int r);

// dim (M^{!.})^k[n] tables from signed Mobius sums.
struct DualDimensions {
    std::string name;
    int n_max = 0;
    // verdict of the accompanying Koszulness check; when false the table is
    // only formal
    bool koszul_verified = false;
    std::map<std::pair<int, int>, Integer> dims;  // (n, k) -> dim
};

DualDimensions dual_dimensions(const CMonoid& m, int n_max);
DualDimensions dual_dimensions(const CModule& mod, int n_max);
DualDimensions dual_dimensions(const COperad& op, int n_max);

struct KoszulVerdict {
    std::string name;
    int n_max = 0;
    bool pass = true;
    bool schur_ok = true;  // pre-filter; stays true where not applicable
    // (n, top rank) -> dim of the top homology of the tested complex
    std::map<std::pair<int, int>, long> top_homology;
    std::vector<std::string> witnesses;
};

KoszulVerdict koszul_check(const CMonoid& m, int n_max);
KoszulVerdict koszul_check(const CModule& mod, int n_max);
KoszulVerdict koszul_check(const COperad& op, int n_max);

// Coefficientwise comparison of the series-algebra dual with the
// poset-derived Mobius data:
//   monoid:  (M^g(x))^{-1}          vs  sum (-1)^{w} mu(0,m)
//   module:  N^g(x) / M^g(x)        vs  -sum (-1)^{w} mu(0,y)
//   operad:  compositional inverse  vs  sum mu(0, top)
struct SeriesIdentityReport {
    std::string name;
    int n_max = 0;
    Egf expected;
    Egf observed;
    std::vector<char> equal_by_n;
    bool all_equal = true;

    SeriesIdentityReport(std::string nm, int n)
        : name(std::move(nm)), n_max(n), expected(n), observed(n) {}
};

SeriesIdentityReport dual_series_identities(const CMonoid& m, int n_max);
SeriesIdentityReport dual_series_identities(const CModule& mod, int n_max);
SeriesIdentityReport dual_series_identities(const COperad& op, int n_max);

// Weight-graded count series of a species.
GradedEgf graded_species_egf(const Species& s,
                             const std::function<int(const Structure&)>& weight,
                             int n_max);

}  // namespace ksp
