#include "ksp/koszul.hpp"

#include <algorithm>

#include "ksp/schur.hpp"

namespace ksp {

Integer count_factorizations(const CMonoid& m, const Structure& target,
                             const std::vector<int>& support, int r) {
    if (r == 0) return support.empty() ? 1 : 0;
    if (support.empty()) return 0;
    if (r == 1) return 1;
    Integer total = 0;
    for (const auto& s : subsets_of(support)) {
        if (s.empty() || s.size() == support.size()) continue;
        auto rest = set_difference(support, s);
        for (const auto& a : m.sp.enumerate(s))
            for (const auto& b : m.sp.enumerate(rest))
                if (m.nu(a, b) == target)
                    total += count_factorizations(m, b, rest, r - 1);
    }
    return total;
}

BarComplexView bar_complex(const CMonoid& m, int n, int k) {
    if (n > kEnumerationGuard) throw error("bar_complex: guard exceeded");
    AxiomReport axioms = check_axioms(m, n);
    if (!axioms.pass)
        throw error("bar_complex: axioms fail for " + m.name + ": " +
                    axioms.failures.front());
    BarComplexView view;
    view.monoid = m.name;
    view.n = n;
    view.k = k;
    view.poset = build_monoid_poset(m, n, k);
    view.complex = order_complex(view.poset);
    view.homology = homology_ranks(view.complex);

    std::vector<int> support(n);
    for (int i = 0; i < n; ++i) support[i] = i;
    view.factorization_counts.assign(view.complex.top() + 1, 0);
    if (k == 0) {
        // the single empty-product chain
        view.factorization_counts[0] = 1;
        return view;
    }
    for (int i : view.poset.maxima)
        for (int r = 1; r <= view.complex.top(); ++r)
            view.factorization_counts[r] +=
                count_factorizations(m, view.poset.elems[i], support, r);
    return view;
}

GradedEgf graded_species_egf(const Species& s,
                             const std::function<int(const Structure&)>& weight,
                             int n_max) {
    GradedEgf g;
    g.trunc = n_max;
    for (int n = 0; n <= n_max; ++n)
        for (const auto& st : s.on_n(n)) g.add(n, weight(st), 1);
    return g;
}

namespace {

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

// signed Mobius sums over the maxima, keyed by the weight of the maximum
std::map<int, Integer> mobius_by_weight(
    const Poset& p, const std::function<int(const Structure&)>& weight) {
    std::map<int, Integer> acc;
    if (!p.bottom) return acc;
    for (int m : p.maxima) acc[weight(p.elems[m])] += mobius(p, *p.bottom, m);
    return acc;
}

}  // namespace

DualDimensions dual_dimensions(const CMonoid& m, int n_max) {
    DualDimensions d;
    d.name = m.name;
    d.n_max = n_max;
    d.koszul_verified = koszul_check(m, n_max).pass;
    for (int n = 0; n <= n_max; ++n) {
        Poset p = build_monoid_poset(m, n);
        for (auto& [k, mu_sum] : mobius_by_weight(p, m.weight))
            d.dims[{n, k}] = parity_sign(k) * mu_sum;
    }
    return d;
}

DualDimensions dual_dimensions(const CModule& mod, int n_max) {
    DualDimensions d;
    d.name = mod.name;
    d.n_max = n_max;
    d.koszul_verified = koszul_check(mod, n_max).pass;
    for (int n = 0; n <= n_max; ++n) {
        Poset p = build_module_poset(mod, n);
        for (auto& [k, mu_sum] : mobius_by_weight(p, mod.weight))
            d.dims[{n, k}] = -parity_sign(k) * mu_sum;
    }
    return d;
}

DualDimensions dual_dimensions(const COperad& op, int n_max) {
    DualDimensions d;
    d.name = op.name;
    d.n_max = n_max;
    d.koszul_verified = koszul_check(op, n_max).pass;
    for (int n = 0; n <= n_max; ++n) {
        Poset p = build_operad_poset(op, n);
        if (!p.bottom) continue;
        Integer total = 0;
        for (int m : p.maxima) total += mobius(p, *p.bottom, m);
        if (p.maxima.empty()) continue;
        int rank = p.rank[p.maxima.front()];
        d.dims[{n, rank}] = parity_sign(rank) * total;
    }
    return d;
}

namespace {

// common CM sweep; builder(n) -> poset
template <typename Builder>
void cm_sweep(KoszulVerdict& v, const Builder& build) {
    for (int n = 0; n <= v.n_max; ++n) {
        Poset p = build(n);
        CmCertificate cert = cohen_macaulay_check(p);
        if (!cert.pass) {
            v.pass = false;
            v.witnesses.push_back("n=" + std::to_string(n) + ": " +
                                  cert.offender);
            continue;
        }
        if (p.maxima.empty()) continue;
        ChainComplex c = order_complex(p);
        auto h = homology_ranks(c);
        if (!h.empty())
            v.top_homology[{n, c.top()}] = h.back();
    }
}

}  // namespace

KoszulVerdict koszul_check(const CMonoid& m, int n_max) {
    if (n_max > kEnumerationGuard) throw error("koszul_check: guard exceeded");
    if (!m.quadratic)
        throw error("koszul_check: " + m.name +
                    " is not quadratic by generators");
    KoszulVerdict v;
    v.name = m.name;
    v.n_max = n_max;

    // Schur-positivity pre-filter on (Ch M^g)^{-1}
    SymFn z = cycle_index(m.sp, n_max);
    SymFn zg(n_max);
    for (int n = 0; n <= n_max; ++n) {
        auto structures = m.sp.on_n(n);
        if (structures.empty()) continue;
        int sign = parity_sign(m.weight(structures.front()));
        SymFn part = z.degree_part(n);
        for (const auto& [p, c] : part.coeffs())
            zg.add_term(p, Rational(sign * c));
    }
    SymFn dual_char = sf_mul_inverse(zg);
    if (!is_schur_nonneg(dual_char)) {
        v.schur_ok = false;
        v.pass = false;
        v.witnesses.push_back("negative Schur coefficient in (Ch M^g)^{-1}");
        return v;
    }

    cm_sweep(v, [&](int n) { return build_monoid_poset(m, n); });
    return v;
}

KoszulVerdict koszul_check(const CModule& mod, int n_max) {
    if (n_max > kEnumerationGuard) throw error("koszul_check: guard exceeded");
    if (!mod.base.quadratic)
        throw error("koszul_check: base monoid " + mod.base.name +
                    " is not quadratic by generators");
    KoszulVerdict v;
    v.name = mod.name;
    v.n_max = n_max;
    cm_sweep(v, [&](int n) { return build_module_poset(mod, n); });
    return v;
}

KoszulVerdict koszul_check(const COperad& op, int n_max) {
    if (n_max > kEnumerationGuard) throw error("koszul_check: guard exceeded");
    KoszulVerdict v;
    v.name = op.name;
    v.n_max = n_max;
    cm_sweep(v, [&](int n) { return build_operad_poset(op, n); });
    return v;
}

namespace {

void compare(SeriesIdentityReport& r) {
    r.equal_by_n.resize(r.n_max + 1, 0);
    for (int n = 0; n <= r.n_max; ++n) {
        r.equal_by_n[n] = (r.expected[n] == r.observed[n]);
        if (!r.equal_by_n[n]) r.all_equal = false;
    }
}

}  // namespace

SeriesIdentityReport dual_series_identities(const CMonoid& m, int n_max) {
    SeriesIdentityReport r(m.name, n_max);
    r.expected = egf_mul_inverse(graded_euler(
        graded_species_egf(m.sp, m.weight, n_max)));
    for (int n = 0; n <= n_max; ++n) {
        Poset p = build_monoid_poset(m, n);
        for (auto& [k, mu_sum] : mobius_by_weight(p, m.weight))
            r.observed.at(n) += Rational(parity_sign(k) * mu_sum);
    }
    compare(r);
    return r;
}

SeriesIdentityReport dual_series_identities(const CModule& mod, int n_max) {
    SeriesIdentityReport r(mod.name, n_max);
    Egf ng = graded_euler(graded_species_egf(mod.sp, mod.weight, n_max));
    Egf mg = graded_euler(
        graded_species_egf(mod.base.sp, mod.base.weight, n_max));
    r.expected = egf_mul(ng, egf_mul_inverse(mg));
    for (int n = 0; n <= n_max; ++n) {
        Poset p = build_module_poset(mod, n);
        for (auto& [k, mu_sum] : mobius_by_weight(p, mod.weight))
            r.observed.at(n) -= Rational(parity_sign(k) * mu_sum);
    }
    compare(r);
    return r;
}

SeriesIdentityReport dual_series_identities(const COperad& op, int n_max) {
    SeriesIdentityReport r(op.name, n_max);
    r.expected = egf_comp_inverse(species_egf(op.sp, n_max));
    for (int n = 0; n <= n_max; ++n) {
        Poset p = build_operad_poset(op, n);
        if (!p.bottom) continue;
        for (int m : p.maxima)
            r.observed.at(n) += Rational(mobius(p, *p.bottom, m));
    }
    compare(r);
    return r;
}

}  // namespace ksp
