#include "ksp/poset.hpp"

#include <algorithm>

namespace ksp {

void Poset::validate() const {
    int n = size();
    for (int i = 0; i < n; ++i)
        if (!le(i, i)) throw error("poset: not reflexive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && le(i, j) && le(j, i))
                throw error("poset: not antisymmetric");
            if (!le(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (le(j, k) && !le(i, k)) throw error("poset: not transitive");
        }
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        bool min = true;
        for (int j = 0; j < size(); ++j)
            if (j != i && le(j, i)) { min = false; break; }
        if (min) out.push_back(i);
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        bool max = true;
        for (int j = 0; j < size(); ++j)
            if (j != i && le(i, j)) { max = false; break; }
        if (max) out.push_back(i);
    }
    return out;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            if (i == j || !le(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < size(); ++k)
                if (k != i && k != j && le(i, k) && le(k, j)) {
                    cover = false;
                    break;
                }
            if (cover) covers.emplace_back(i, j);
        }
    return covers;
}

Poset subposet(const Poset& p, const std::vector<int>& idx) {
    Poset q;
    int m = static_cast<int>(idx.size());
    q.elems.reserve(m);
    for (int i : idx) q.elems.push_back(p.elems[i]);
    q.leq.assign(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) q.leq[a][b] = p.leq[idx[a]][idx[b]];
    if (!p.rank.empty())
        for (int i : idx) q.rank.push_back(p.rank[i]);
    if (p.bottom) {
        auto it = std::find(idx.begin(), idx.end(), *p.bottom);
        if (it != idx.end())
            q.bottom = static_cast<int>(it - idx.begin());
    }
    for (int mx : p.maxima) {
        auto it = std::find(idx.begin(), idx.end(), mx);
        if (it != idx.end())
            q.maxima.push_back(static_cast<int>(it - idx.begin()));
    }
    return q;
}

Poset interval(const Poset& p, int x, int y) {
    if (!p.le(x, y)) throw error("poset: interval endpoints incomparable");
    std::vector<int> idx;
    for (int i = 0; i < p.size(); ++i)
        if (p.le(x, i) && p.le(i, y)) idx.push_back(i);
    Poset q = subposet(p, idx);
    q.bottom = static_cast<int>(
        std::find(idx.begin(), idx.end(), x) - idx.begin());
    q.maxima = {static_cast<int>(
        std::find(idx.begin(), idx.end(), y) - idx.begin())};
    return q;
}

namespace {

std::vector<int> range_n(int n) {
    std::vector<int> u(n);
    for (int i = 0; i < n; ++i) u[i] = i;
    return u;
}

// Keep only elements below some maximum (the bottom survives even when there
// are no maxima, giving the degenerate one-point poset); re-index.
Poset restrict_below_maxima(Poset p) {
    std::vector<int> keep;
    for (int i = 0; i < p.size(); ++i) {
        if (p.bottom && i == *p.bottom) { keep.push_back(i); continue; }
        for (int m : p.maxima)
            if (p.le(i, m)) { keep.push_back(i); break; }
    }
    if (static_cast<int>(keep.size()) == p.size()) return p;
    return subposet(p, keep);
}

}  // namespace

Poset build_monoid_poset(const CMonoid& m, int n,
                         std::optional<int> weight_cap) {
    if (n > kEnumerationGuard) throw error("build_monoid_poset: guard exceeded");
    Poset p;
    std::vector<std::vector<int>> supports;
    auto u = range_n(n);
    for (const auto& s : subsets_of(u))
        for (const auto& st : m.sp.enumerate(s)) {
            p.elems.push_back(st);
            supports.push_back(s);
        }
    int sz = static_cast<int>(p.elems.size());
    p.leq.assign(sz, std::vector<char>(sz, 0));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
            if (i == j) { p.leq[i][j] = 1; continue; }
            if (!std::includes(supports[j].begin(), supports[j].end(),
                               supports[i].begin(), supports[i].end()))
                continue;
            auto rest = set_difference(supports[j], supports[i]);
            for (const auto& mf : m.sp.enumerate(rest))
                if (m.nu(p.elems[i], mf) == p.elems[j]) {
                    p.leq[i][j] = 1;
                    break;
                }
        }
    for (int i = 0; i < sz; ++i) {
        if (static_cast<int>(supports[i].size()) != n) continue;
        if (weight_cap && m.weight(p.elems[i]) != *weight_cap) continue;
        p.maxima.push_back(i);
    }
    for (int i = 0; i < sz; ++i)
        if (supports[i].empty()) p.bottom = i;
    for (int i = 0; i < sz; ++i) p.rank.push_back(m.weight(p.elems[i]));
    p = restrict_below_maxima(std::move(p));
    p.validate();
    return p;
}

Poset build_module_poset(const CModule& mod, int n) {
    if (n > kEnumerationGuard) throw error("build_module_poset: guard exceeded");
    Poset p;
    // adjoined artificial bottom
    p.elems.push_back(Structure::atom(-1));
    p.bottom = 0;
    std::vector<std::vector<int>> supports = {{}};
    auto u = range_n(n);
    for (const auto& s : subsets_of(u))
        for (const auto& st : mod.sp.enumerate(s)) {
            p.elems.push_back(st);
            supports.push_back(s);
        }
    int sz = static_cast<int>(p.elems.size());
    p.leq.assign(sz, std::vector<char>(sz, 0));
    for (int i = 0; i < sz; ++i) p.leq[0][i] = 1;
    p.leq[0][0] = 1;
    for (int i = 1; i < sz; ++i)
        for (int j = 1; j < sz; ++j) {
            if (i == j) { p.leq[i][j] = 1; continue; }
            if (!std::includes(supports[j].begin(), supports[j].end(),
                               supports[i].begin(), supports[i].end()))
                continue;
            auto rest = set_difference(supports[j], supports[i]);
            for (const auto& mf : mod.base.sp.enumerate(rest))
                if (mod.tau(p.elems[i], mf) == p.elems[j]) {
                    p.leq[i][j] = 1;
                    break;
                }
        }
    for (int i = 1; i < sz; ++i)
        if (static_cast<int>(supports[i].size()) == n) p.maxima.push_back(i);
    p.rank.push_back(0);
    for (int i = 1; i < sz; ++i) p.rank.push_back(mod.weight(p.elems[i]) + 1);
    p = restrict_below_maxima(std::move(p));
    p.validate();
    return p;
}

namespace {

// All assemblies on the label set u: one operad structure per block of a set
// partition. Assembly canonical form: sorted set of components.
std::vector<Structure> assemblies_on(const COperad& op,
                                     const std::vector<int>& u) {
    std::vector<Structure> out;
    for (const auto& part : set_partitions_of(u)) {
        std::vector<std::vector<Structure>> opts;
        bool dead = false;
        for (const auto& b : part) {
            std::vector<int> sb = b;
            std::sort(sb.begin(), sb.end());
            opts.push_back(op.sp.enumerate(sb));
            if (opts.back().empty()) { dead = true; break; }
        }
        if (dead) continue;
        std::vector<size_t> idx(opts.size(), 0);
        bool more = !opts.empty() || u.empty();
        if (opts.empty()) {
            out.push_back(Structure::set({}));
            continue;
        }
        while (more) {
            std::vector<Structure> comps;
            for (size_t b = 0; b < opts.size(); ++b)
                comps.push_back(opts[b][idx[b]]);
            out.push_back(Structure::set(std::move(comps)));
            more = false;
            for (size_t b = 0; b < idx.size(); ++b) {
                if (++idx[b] < opts[b].size()) { more = true; break; }
                idx[b] = 0;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// a1 <= a2 iff a2 is obtained by eta-composing each component of a2 from the
// components of a1 it covers.
bool operad_le(const COperad& op, const Structure& a1, const Structure& a2) {
    if (a1 == a2) return true;
    for (const auto& big : a2.items) {
        auto bl = big.labels();
        std::map<int, Structure> blocks;
        std::vector<int> reps;
        for (const auto& small : a1.items) {
            auto sl = small.labels();
            if (std::includes(bl.begin(), bl.end(), sl.begin(), sl.end())) {
                blocks.emplace(sl.front(), small);
                reps.push_back(sl.front());
            }
        }
        size_t covered = 0;
        for (const auto& [rep, s] : blocks) covered += s.labels().size();
        if (covered != bl.size()) return false;
        std::sort(reps.begin(), reps.end());
        bool found = false;
        for (const auto& outer : op.sp.enumerate(reps))
            if (op.eta(outer, blocks) == big) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

}  // namespace

Poset build_operad_poset(const COperad& op, int n) {
    if (n > kEnumerationGuard) throw error("build_operad_poset: guard exceeded");
    Poset p;
    auto u = range_n(n);
    p.elems = assemblies_on(op, u);
    int sz = static_cast<int>(p.elems.size());
    p.leq.assign(sz, std::vector<char>(sz, 0));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            p.leq[i][j] = (i == j) || operad_le(op, p.elems[i], p.elems[j]);
    for (int i = 0; i < sz; ++i) {
        if (p.elems[i].items.size() == 1)  // one-block assemblies are the maxima
            p.maxima.push_back(i);
        bool all_singletons = true;
        for (const auto& c : p.elems[i].items)
            if (c.labels().size() != 1) { all_singletons = false; break; }
        if (all_singletons) p.bottom = i;
        p.rank.push_back(n - static_cast<int>(p.elems[i].items.size()));
    }
    p = restrict_below_maxima(std::move(p));
    p.validate();
    return p;
}

Integer mobius(const Poset& p, int x, int y) {
    if (!p.le(x, y)) throw error("mobius: incomparable pair");
    // mu(x,x) = 1; mu(x,y) = -sum_{x<=z<y} mu(x,z)
    std::vector<int> zs;
    for (int z = 0; z < p.size(); ++z)
        if (p.le(x, z) && p.le(z, y)) zs.push_back(z);
    std::map<int, Integer> mu;
    // process in a linear extension: increasing size of the down-set
    std::vector<int> by_count = zs;
    std::sort(by_count.begin(), by_count.end(), [&](int a, int b) {
        int ca = 0, cb = 0;
        for (int z : zs) {
            if (p.le(x, z) && p.le(z, a)) ++ca;
            if (p.le(x, z) && p.le(z, b)) ++cb;
        }
        return ca < cb;
    });
    for (int z : by_count) {
        if (z == x) {
            mu[z] = 1;
            continue;
        }
        Integer s = 0;
        for (int w : zs)
            if (p.le(w, z) && w != z) s += mu.at(w);
        mu[z] = -s;
    }
    return mu.at(y);
}

namespace {

// Induced subposet of sigma-fixed elements; sentinel labels (-1) are fixed.
Poset fixed_subposet(const Poset& p, const std::map<int, int>& sigma0) {
    std::map<int, int> sigma = sigma0;
    sigma[-1] = -1;
    std::vector<int> idx;
    for (int i = 0; i < p.size(); ++i) {
        bool fixed = false;
        try {
            fixed = relabel(sigma, p.elems[i]) == p.elems[i];
        } catch (const error&) {
            fixed = false;
        }
        if (fixed) idx.push_back(i);
    }
    return subposet(p, idx);
}

template <typename Builder>
MobiusSpeciesReport generic_report(const Builder& build, int n_max,
                                   bool with_character) {
    MobiusSpeciesReport rep(n_max);
    for (int n = 0; n <= n_max; ++n) {
        Poset p = build(n);
        Integer total = 0;
        if (p.bottom)
            for (int m : p.maxima) total += mobius(p, *p.bottom, m);
        rep.mobius_by_n.push_back(total);
        if (!with_character) continue;
        for (const auto& alpha : partitions_of(n)) {
            auto sigma = perm_of_type(alpha);
            Poset q = fixed_subposet(p, sigma);
            Integer s = 0;
            if (q.bottom)
                for (int m : q.maxima) s += mobius(q, *q.bottom, m);
            if (s != 0)
                rep.character.add_term(alpha, Rational(s) / Rational(z_of(alpha)));
        }
    }
    return rep;
}

}  // namespace

MobiusSpeciesReport mobius_inverse_series(const CMonoid& m, int n_max,
                                          bool with_character) {
    return generic_report(
        [&](int n) { return build_monoid_poset(m, n); }, n_max, with_character);
}

MobiusSpeciesReport mobius_inverse_series(const CModule& mod, int n_max,
                                          bool with_character) {
    return generic_report(
        [&](int n) { return build_module_poset(mod, n); }, n_max,
        with_character);
}

MobiusSpeciesReport mobius_inverse_series(const COperad& op, int n_max,
                                          bool with_character) {
    return generic_report(
        [&](int n) { return build_operad_poset(op, n); }, n_max,
        with_character);
}

}  // namespace ksp
