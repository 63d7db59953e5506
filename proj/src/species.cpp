#include "ksp/species.hpp"

#include <algorithm>
#include <memory>

namespace ksp {

// --- enumeration helpers -------------------------------------------------

std::vector<std::vector<int>> subsets_of(const std::vector<int>& u) {
    int n = static_cast<int>(u.size());
    std::vector<std::vector<int>> out;
    out.reserve(size_t(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(u[i]);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {
void partitions_rec(const std::vector<int>& u, size_t next,
                    std::vector<std::vector<int>>& cur,
                    std::vector<std::vector<std::vector<int>>>& out) {
    if (next == u.size()) {
        out.push_back(cur);
        return;
    }
    for (size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(u[next]);
        partitions_rec(u, next + 1, cur, out);
        cur[b].pop_back();
    }
    cur.push_back({u[next]});
    partitions_rec(u, next + 1, cur, out);
    cur.pop_back();
}
}  // namespace

std::vector<std::vector<std::vector<int>>> set_partitions_of(
    const std::vector<int>& u) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur;
    partitions_rec(u, 0, cur, out);
    return out;
}

std::vector<int> set_difference(const std::vector<int>& u,
                                const std::vector<int>& v) {
    std::vector<int> r;
    std::set_difference(u.begin(), u.end(), v.begin(), v.end(),
                        std::back_inserter(r));
    return r;
}

namespace {

std::vector<Structure> sorted_unique(std::vector<Structure> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Structure set_of_atoms(const std::vector<int>& u) {
    std::vector<Structure> a;
    a.reserve(u.size());
    for (int l : u) a.push_back(Structure::atom(l));
    return Structure::set(std::move(a));
}

Structure merge_sets(const Structure& a, const Structure& b) {
    std::vector<Structure> xs = a.items;
    xs.insert(xs.end(), b.items.begin(), b.items.end());
    return Structure::set(std::move(xs));
}

}  // namespace

// --- plain species -------------------------------------------------------

Species sp_X() {
    return {"X", [](const std::vector<int>& u) {
                std::vector<Structure> out;
                if (u.size() == 1) out.push_back(Structure::atom(u[0]));
                return out;
            }};
}

namespace {
Species sets_if(std::string name, std::function<bool(int)> size_ok) {
    return {std::move(name), [size_ok](const std::vector<int>& u) {
                std::vector<Structure> out;
                if (size_ok(static_cast<int>(u.size())))
                    out.push_back(set_of_atoms(u));
                return out;
            }};
}
}  // namespace

Species sp_E() { return sets_if("E", [](int) { return true; }); }
Species sp_E_exactly(int k) {
    return sets_if("E_" + std::to_string(k), [k](int n) { return n == k; });
}
Species sp_E_atleast(int j) {
    return sets_if("E_" + std::to_string(j) + "+", [j](int n) { return n >= j; });
}
Species sp_E_divisible(int k) {
    return sets_if("E_(" + std::to_string(k) + ")",
                   [k](int n) { return n % k == 0; });
}
Species sp_Cosh() {
    Species s = sp_E_divisible(2);
    s.name = "Cosh";
    return s;
}
Species sp_Sinh() {
    Species s = sets_if("Sinh", [](int n) { return n % 2 == 1; });
    return s;
}

Species sp_L() {
    return {"L", [](const std::vector<int>& u) {
                std::vector<int> p = u;
                std::vector<Structure> out;
                do {
                    std::vector<Structure> a;
                    for (int l : p) a.push_back(Structure::atom(l));
                    out.push_back(Structure::seq(std::move(a)));
                } while (std::next_permutation(p.begin(), p.end()));
                return sorted_unique(std::move(out));
            }};
}

Species sp_pointed() {
    return {"E.", [](const std::vector<int>& u) {
                std::vector<Structure> out;
                for (int p : u)
                    out.push_back(Structure::seq(
                        {Structure::atom(p), set_of_atoms(u)}));
                return sorted_unique(std::move(out));
            }};
}

Species sp_A_M(const CMonoid& m) {
    // A_M = X.M(A_M): root, partition of the rest, M-structure over the
    // blocks with each block replaced by its enriched subtree.
    auto self = std::make_shared<
        std::function<std::vector<Structure>(const std::vector<int>&)>>();
    auto msp = m.sp;
    *self = [self, msp](const std::vector<int>& u) -> std::vector<Structure> {
        std::vector<Structure> out;
        for (int root : u) {
            std::vector<int> rest = set_difference(u, {root});
            for (const auto& part : set_partitions_of(rest)) {
                std::vector<int> reps;
                std::vector<std::vector<Structure>> options;
                for (const auto& block : part) {
                    reps.push_back(*std::min_element(block.begin(), block.end()));
                    std::vector<int> sb = block;
                    std::sort(sb.begin(), sb.end());
                    options.push_back((*self)(sb));
                }
                std::sort(reps.begin(), reps.end());
                auto mstructs = msp.enumerate(reps);
                if (mstructs.empty()) continue;
                // cartesian product over subtree choices
                std::vector<size_t> idx(options.size(), 0);
                bool more = true;
                if (std::any_of(options.begin(), options.end(),
                                [](const auto& o) { return o.empty(); }))
                    continue;
                while (more) {
                    std::map<int, Structure> sub;
                    for (size_t b = 0; b < part.size(); ++b) {
                        int rep = *std::min_element(part[b].begin(), part[b].end());
                        sub.emplace(rep, options[b][idx[b]]);
                    }
                    for (const auto& ms : mstructs)
                        out.push_back(Structure::seq(
                            {Structure::atom(root), substitute_atoms(ms, sub)}));
                    // advance
                    more = false;
                    for (size_t b = 0; b < idx.size(); ++b) {
                        if (++idx[b] < options[b].size()) { more = true; break; }
                        idx[b] = 0;
                    }
                }
            }
        }
        return sorted_unique(std::move(out));
    };
    return {"A_" + m.name, [self](const std::vector<int>& u) { return (*self)(u); }};
}

Species sp_A() {
    Species s = sp_A_M(mon_E());
    s.name = "A";
    return s;
}

Species sp_T_M(const CMonoid& m) {
    auto msp = m.sp;
    return {"T_" + m.name, [msp](const std::vector<int>& u) {
                std::vector<Structure> out;
                for (int root : u) {
                    std::vector<int> rest = set_difference(u, {root});
                    for (const auto& ms : msp.enumerate(rest))
                        out.push_back(
                            Structure::seq({Structure::atom(root), ms}));
                }
                return sorted_unique(std::move(out));
            }};
}

// --- monoids -------------------------------------------------------------

CMonoid mon_E() {
    CMonoid m;
    m.name = "E";
    m.sp = sp_E();
    m.nu = merge_sets;
    m.generator_card = 1;
    m.weight = [](const Structure& s) { return static_cast<int>(s.items.size()); };
    return m;
}

CMonoid mon_L() {
    CMonoid m;
    m.name = "L";
    m.sp = sp_L();
    m.nu = [](const Structure& a, const Structure& b) {
        std::vector<Structure> xs = a.items;
        xs.insert(xs.end(), b.items.begin(), b.items.end());
        return Structure::seq(std::move(xs));
    };
    m.generator_card = 1;
    m.weight = [](const Structure& s) { return static_cast<int>(s.items.size()); };
    return m;
}

CMonoid mon_E_divisible(int k) {
    CMonoid m;
    m.name = k == 2 ? "Cosh" : "E_(" + std::to_string(k) + ")";
    m.sp = k == 2 ? sp_Cosh() : sp_E_divisible(k);
    m.nu = merge_sets;
    m.generator_card = k;
    m.weight = [k](const Structure& s) {
        return static_cast<int>(s.items.size()) / k;
    };
    return m;
}

CMonoid mon_Cosh() { return mon_E_divisible(2); }

CMonoid segre(const CMonoid& a, const CMonoid& b) {
    CMonoid m;
    m.name = a.name + "segre" + b.name;
    auto aw = a.weight, bw = b.weight;
    auto asp = a.sp, bsp = b.sp;
    m.sp = {m.name, [asp, bsp, aw, bw](const std::vector<int>& u) {
                std::vector<Structure> out;
                for (const auto& u1 : subsets_of(u)) {
                    auto u2 = set_difference(u, u1);
                    for (const auto& sa : asp.enumerate(u1))
                        for (const auto& sb : bsp.enumerate(u2))
                            if (aw(sa) == bw(sb))
                                out.push_back(Structure::seq({sa, sb}));
                }
                return sorted_unique(std::move(out));
            }};
    auto anu = a.nu, bnu = b.nu;
    m.nu = [anu, bnu](const Structure& x, const Structure& y) {
        return Structure::seq(
            {anu(x.items[0], y.items[0]), bnu(x.items[1], y.items[1])});
    };
    m.generator_card = a.generator_card + b.generator_card;
    m.weight = [aw](const Structure& s) { return aw(s.items[0]); };
    return m;
}

CMonoid mon_EsegreE() {
    CMonoid m = segre(mon_E(), mon_E());
    m.name = "EsegreE";
    m.sp.name = m.name;
    return m;
}

CMonoid mon_Lib(int k, int n) {
    if (n < 1) throw error("Lib needs n >= 1");
    CMonoid m = mon_E_divisible(k);
    for (int i = 1; i < n; ++i) m = segre(m, mon_E_divisible(k));
    m.name = "Lib_(" + std::to_string(k) + "," + std::to_string(n) + ")";
    m.sp.name = m.name;
    return m;
}

CMonoid veronese(const CMonoid& m, int k) {
    if (k < 1) throw error("veronese needs k >= 1");
    if (k == 1) return m;
    CMonoid v;
    v.name = m.name + "_(" + std::to_string(k) + ")";
    auto msp = m.sp;
    auto mw = m.weight;
    v.sp = {v.name, [msp, mw, k](const std::vector<int>& u) {
                std::vector<Structure> out;
                for (const auto& s : msp.enumerate(u))
                    if (mw(s) % k == 0) out.push_back(s);
                return out;
            }};
    v.nu = m.nu;
    v.generator_card = m.generator_card * k;
    v.weight = [mw, k](const Structure& s) { return mw(s) / k; };
    return v;
}

CMonoid mon_L_of_plus(const CMonoid& m) {
    // L(M+): sequences of nonempty M-structures; product is concatenation.
    CMonoid r;
    r.name = "L(" + m.name + "+)";
    auto msp = m.sp;
    auto self = std::make_shared<
        std::function<std::vector<Structure>(const std::vector<int>&)>>();
    *self = [self, msp](const std::vector<int>& u) -> std::vector<Structure> {
        std::vector<Structure> out;
        if (u.empty()) {
            out.push_back(Structure::seq({}));
            return out;
        }
        for (const auto& first : subsets_of(u)) {
            if (first.empty()) continue;
            auto rest = set_difference(u, first);
            auto heads = msp.enumerate(first);
            if (heads.empty()) continue;
            for (const auto& tail : (*self)(rest))
                for (const auto& h : heads) {
                    std::vector<Structure> xs;
                    xs.push_back(h);
                    xs.insert(xs.end(), tail.items.begin(), tail.items.end());
                    out.push_back(Structure::seq(std::move(xs)));
                }
        }
        return sorted_unique(std::move(out));
    };
    r.sp = {r.name, [self](const std::vector<int>& u) { return (*self)(u); }};
    r.nu = [](const Structure& a, const Structure& b) {
        std::vector<Structure> xs = a.items;
        xs.insert(xs.end(), b.items.begin(), b.items.end());
        return Structure::seq(std::move(xs));
    };
    r.generator_card = 1;
    r.quadratic = false;
    r.weight = [](const Structure& s) { return static_cast<int>(s.items.size()); };
    return r;
}

// --- modules -------------------------------------------------------------

CModule mod_Sinh() {
    CModule n;
    n.name = "Sinh";
    n.base = mon_Cosh();
    n.sp = sp_Sinh();
    n.tau = merge_sets;
    n.weight = [](const Structure& s) {
        return (static_cast<int>(s.items.size()) - 1) / 2;
    };
    return n;
}

CModule mod_E_atleast(int j) {
    if (j < 1) throw error("E_{j+} module needs j >= 1");
    CModule n;
    n.name = "E_" + std::to_string(j) + "+";
    n.base = mon_E();
    n.sp = sp_E_atleast(j);
    n.tau = merge_sets;
    n.weight = [j](const Structure& s) {
        return static_cast<int>(s.items.size()) - j;
    };
    return n;
}

CModule truncate_module(const CMonoid& m, int l) {
    if (l < 1) throw error("truncate_module needs l >= 1");
    CModule n;
    n.name = m.name + "^[" + std::to_string(l) + "]";
    n.base = m;
    auto msp = m.sp;
    auto mw = m.weight;
    n.sp = {n.name, [msp, mw, l](const std::vector<int>& u) {
                std::vector<Structure> out;
                for (const auto& s : msp.enumerate(u))
                    if (mw(s) >= l) out.push_back(s);
                return out;
            }};
    n.tau = m.nu;
    n.weight = [mw, l](const Structure& s) { return mw(s) - l; };
    return n;
}

// --- operads -------------------------------------------------------------

COperad op_Com() {
    COperad o;
    o.name = "Com";
    o.sp = sp_E_atleast(1);
    o.sp.name = "Com";
    o.eta = [](const Structure&, const std::map<int, Structure>& blocks) {
        std::vector<Structure> atoms;
        for (const auto& [rep, s] : blocks)
            atoms.insert(atoms.end(), s.items.begin(), s.items.end());
        return Structure::set(std::move(atoms));
    };
    o.weight = [](const Structure& s) {
        return static_cast<int>(s.items.size()) - 1;
    };
    return o;
}

COperad op_pointed() {
    COperad o;
    o.name = "pointed";
    o.sp = sp_pointed();
    o.eta = [](const Structure& outer, const std::map<int, Structure>& blocks) {
        int outer_point = outer.items[0].label;
        Structure point = blocks.at(outer_point).items[0];
        std::vector<Structure> atoms;
        for (const auto& [rep, s] : blocks)
            atoms.insert(atoms.end(), s.items[1].items.begin(),
                         s.items[1].items.end());
        return Structure::seq({point, Structure::set(std::move(atoms))});
    };
    o.weight = [](const Structure& s) {
        return static_cast<int>(s.items[1].items.size()) - 1;
    };
    return o;
}

COperad op_A() {
    COperad o;
    o.name = "A";
    o.sp = sp_A();
    // Grafting: replace each vertex of the outer tree by its block's tree,
    // hanging composed subtrees off the block tree's root.
    struct Graft {
        const std::map<int, Structure>* blocks;
        Structure run(const Structure& node) const {
            Structure t = blocks->at(node.items[0].label);
            std::vector<Structure> kids = t.items[1].items;
            for (const auto& c : node.items[1].items) kids.push_back(run(c));
            return Structure::seq(
                {t.items[0], Structure::set(std::move(kids))});
        }
    };
    o.eta = [](const Structure& outer, const std::map<int, Structure>& blocks) {
        Graft g{&blocks};
        return g.run(outer);
    };
    o.weight = [](const Structure& s) {
        return static_cast<int>(s.labels().size()) - 1;
    };
    return o;
}

// --- axiom checks --------------------------------------------------------

namespace {

std::vector<int> range_n(int n) {
    std::vector<int> u(n);
    for (int i = 0; i < n; ++i) u[i] = i;
    return u;
}

// All ways of writing {0..n-1} as an ordered sequence of `parts` disjoint
// (possibly empty) subsets.
void for_each_split(int n, int parts,
                    const std::function<void(const std::vector<std::vector<int>>&)>& f) {
    std::vector<int> assign(n, 0);
    while (true) {
        std::vector<std::vector<int>> split(parts);
        for (int i = 0; i < n; ++i) split[assign[i]].push_back(i);
        f(split);
        int i = 0;
        for (; i < n; ++i) {
            if (++assign[i] < parts) break;
            assign[i] = 0;
        }
        if (i == n) break;
    }
}

}  // namespace

AxiomReport check_axioms(const CMonoid& m, int n_max) {
    if (n_max > kEnumerationGuard) throw error("check_axioms: guard exceeded");
    AxiomReport rep;
    auto units = m.sp.enumerate({});
    if (units.size() != 1) {
        rep.fail("unit: M[{}] must have exactly one structure");
        return rep;
    }
    Structure unit = units[0];
    if (m.weight(unit) != 0) rep.fail("grading: unit must have weight 0");

    for (int n = 0; n <= n_max; ++n) {
        auto u = range_n(n);
        auto all = m.sp.enumerate(u);
        // unit law and closure-in-species
        for (const auto& s : all) {
            if (!(m.nu(unit, s) == s) || !(m.nu(s, unit) == s)) {
                rep.fail("unit law fails at " + s.str());
                return rep;
            }
        }
        // associativity + grading additivity over all ordered 3-splits
        for_each_split(n, 3, [&](const std::vector<std::vector<int>>& sp3) {
            auto a1 = m.sp.enumerate(sp3[0]);
            auto a2 = m.sp.enumerate(sp3[1]);
            auto a3 = m.sp.enumerate(sp3[2]);
            for (const auto& x : a1)
                for (const auto& y : a2) {
                    Structure xy = m.nu(x, y);
                    if (m.weight(xy) != m.weight(x) + m.weight(y))
                        rep.fail("grading not additive at " + xy.str());
                    for (const auto& z : a3)
                        if (!(m.nu(xy, z) == m.nu(x, m.nu(y, z))))
                            rep.fail("associativity fails at " + x.str() + "," +
                                     y.str() + "," + z.str());
                }
        });
        // left cancellation over complementary pairs
        for (const auto& u1 : subsets_of(u)) {
            auto u2 = set_difference(u, u1);
            auto ms = m.sp.enumerate(u1);
            auto as = m.sp.enumerate(u2);
            for (const auto& x : ms) {
                std::vector<Structure> images;
                for (const auto& a : as) images.push_back(m.nu(x, a));
                std::sort(images.begin(), images.end());
                if (std::adjacent_find(images.begin(), images.end()) !=
                    images.end())
                    rep.fail("left cancellation fails under " + x.str());
            }
        }
        // quadratic concentration: weight n/c on n labels
        if (m.quadratic)
            for (const auto& s : all)
                if (m.weight(s) * m.generator_card != n)
                    rep.fail("not quadratic-by-generators at " + s.str());
        if (!rep.pass) return rep;
    }
    return rep;
}

AxiomReport check_axioms(const CModule& mod, int n_max) {
    if (n_max > kEnumerationGuard) throw error("check_axioms: guard exceeded");
    AxiomReport rep;
    if (!mod.sp.enumerate({}).empty()) rep.fail("module: N[{}] must be empty");
    Structure unit = mod.base.unit();
    for (int n = 0; n <= n_max; ++n) {
        auto u = range_n(n);
        for (const auto& s : mod.sp.enumerate(u))
            if (!(mod.tau(s, unit) == s)) rep.fail("module unit law at " + s.str());
        // pseudoassociativity tau(tau(x,m),m') = tau(x, nu(m,m'))
        for_each_split(n, 3, [&](const std::vector<std::vector<int>>& sp3) {
            auto xs = mod.sp.enumerate(sp3[0]);
            auto ms = mod.base.sp.enumerate(sp3[1]);
            auto ms2 = mod.base.sp.enumerate(sp3[2]);
            for (const auto& x : xs)
                for (const auto& a : ms) {
                    Structure xa = mod.tau(x, a);
                    if (mod.weight(xa) !=
                        mod.weight(x) + mod.base.weight(a))
                        rep.fail("module grading not additive at " + xa.str());
                    for (const auto& b : ms2)
                        if (!(mod.tau(xa, b) == mod.tau(x, mod.base.nu(a, b))))
                            rep.fail("pseudoassociativity fails at " + x.str());
                }
        });
        // cancellation: tau(x, a) = tau(x, b) => a = b
        for (const auto& u1 : subsets_of(u)) {
            auto u2 = set_difference(u, u1);
            for (const auto& x : mod.sp.enumerate(u1)) {
                std::vector<Structure> images;
                for (const auto& a : mod.base.sp.enumerate(u2))
                    images.push_back(mod.tau(x, a));
                std::sort(images.begin(), images.end());
                if (std::adjacent_find(images.begin(), images.end()) !=
                    images.end())
                    rep.fail("module cancellation fails under " + x.str());
            }
        }
        if (!rep.pass) return rep;
    }
    return rep;
}

AxiomReport check_axioms(const COperad& op, int n_max) {
    if (n_max > kEnumerationGuard) throw error("check_axioms: guard exceeded");
    AxiomReport rep;
    if (!op.sp.enumerate({}).empty()) rep.fail("operad: O[{}] must be empty");
    if (op.sp.enumerate({0}).size() != 1)
        rep.fail("operad: O on a singleton must be a single structure");
    if (!rep.pass) return rep;

    for (int n = 1; n <= n_max; ++n) {
        auto u = range_n(n);
        auto all = op.sp.enumerate(u);
        // unit laws
        Structure unit_outer = op.sp.enumerate({0})[0];
        for (const auto& c : all) {
            // compose c with all-singleton blocks
            std::map<int, Structure> singles;
            for (int i = 0; i < n; ++i)
                singles.emplace(i, op.sp.enumerate({i})[0]);
            if (!(op.eta(c, singles) == c))
                rep.fail("operad unit (singleton blocks) fails at " + c.str());
        }
        {
            // one-block composition with the singleton outer structure
            std::map<int, Structure> one;
            for (const auto& c : all) {
                one.clear();
                one.emplace(0, c);
                if (!(op.eta(unit_outer, one) == c))
                    rep.fail("operad unit (singleton outer) fails at " + c.str());
            }
        }
        // associativity (two-level composition) and cancellation
        for (const auto& part : set_partitions_of(u)) {
            if (part.empty()) continue;
            std::vector<int> reps;
            for (const auto& b : part)
                reps.push_back(*std::min_element(b.begin(), b.end()));
            std::sort(reps.begin(), reps.end());
            // choose structures on blocks (first choice only, to bound cost:
            // iterate all when few)
            std::vector<std::vector<Structure>> opts;
            bool empty_opt = false;
            for (const auto& b : part) {
                std::vector<int> sb = b;
                std::sort(sb.begin(), sb.end());
                opts.push_back(op.sp.enumerate(sb));
                if (opts.back().empty()) empty_opt = true;
            }
            if (empty_opt) continue;
            std::vector<size_t> idx(opts.size(), 0);
            bool more = true;
            while (more) {
                std::map<int, Structure> blocks;
                for (size_t b = 0; b < part.size(); ++b) {
                    int rep_l = *std::min_element(part[b].begin(), part[b].end());
                    blocks.emplace(rep_l, opts[b][idx[b]]);
                }
                // cancellation: outer -> eta(outer, blocks) injective
                auto outers = op.sp.enumerate(reps);
                std::vector<Structure> images;
                for (const auto& o : outers) images.push_back(op.eta(o, blocks));
                std::sort(images.begin(), images.end());
                if (std::adjacent_find(images.begin(), images.end()) !=
                    images.end())
                    rep.fail("operad cancellation fails");
                // associativity: group the blocks, compose groupwise vs all at
                // once through the rep level
                for (const auto& grouping : set_partitions_of(reps)) {
                    std::vector<int> group_reps;
                    std::vector<std::vector<Structure>> eopts;
                    bool dead = false;
                    for (const auto& g : grouping) {
                        std::vector<int> sg = g;
                        std::sort(sg.begin(), sg.end());
                        group_reps.push_back(sg[0]);
                        eopts.push_back(op.sp.enumerate(sg));
                        if (eopts.back().empty()) dead = true;
                    }
                    if (dead) continue;
                    std::sort(group_reps.begin(), group_reps.end());
                    auto tops = op.sp.enumerate(group_reps);
                    std::vector<size_t> eidx(eopts.size(), 0);
                    bool emore = true;
                    while (emore) {
                        std::map<int, Structure> emap;
                        for (size_t g = 0; g < grouping.size(); ++g) {
                            std::vector<int> sg = grouping[g];
                            std::sort(sg.begin(), sg.end());
                            emap.emplace(sg[0], eopts[g][eidx[g]]);
                        }
                        for (const auto& f : tops) {
                            // route 1: compose rep level first
                            Structure g1 = op.eta(f, emap);
                            Structure r1 = op.eta(g1, blocks);
                            // route 2: compose each group with its blocks,
                            // then the top
                            std::map<int, Structure> composed;
                            for (size_t g = 0; g < grouping.size(); ++g) {
                                std::vector<int> sg = grouping[g];
                                std::sort(sg.begin(), sg.end());
                                std::map<int, Structure> sub;
                                std::vector<int> support;
                                for (int rl : sg) {
                                    sub.emplace(rl, blocks.at(rl));
                                    auto ls = blocks.at(rl).labels();
                                    support.insert(support.end(), ls.begin(),
                                                   ls.end());
                                }
                                Structure dg = op.eta(emap.at(sg[0]), sub);
                                composed.emplace(
                                    *std::min_element(support.begin(),
                                                      support.end()),
                                    dg);
                            }
                            // top structure must be relabeled to the new reps
                            std::map<int, int> rl;
                            for (size_t g = 0; g < grouping.size(); ++g) {
                                std::vector<int> sg = grouping[g];
                                std::sort(sg.begin(), sg.end());
                                std::vector<int> support;
                                for (int r2 : sg) {
                                    auto ls = blocks.at(r2).labels();
                                    support.insert(support.end(), ls.begin(),
                                                   ls.end());
                                }
                                rl[sg[0]] =
                                    *std::min_element(support.begin(),
                                                      support.end());
                            }
                            Structure f2 = relabel(rl, f);
                            Structure r2 = op.eta(f2, composed);
                            if (!(r1 == r2))
                                rep.fail("operad associativity fails");
                        }
                        emore = false;
                        for (size_t g = 0; g < eidx.size(); ++g) {
                            if (++eidx[g] < eopts[g].size()) { emore = true; break; }
                            eidx[g] = 0;
                        }
                    }
                    if (!rep.pass) return rep;
                }
                more = false;
                for (size_t b = 0; b < idx.size(); ++b) {
                    if (++idx[b] < opts[b].size()) { more = true; break; }
                    idx[b] = 0;
                }
            }
            if (!rep.pass) return rep;
        }
    }
    return rep;
}

// --- cycle index ---------------------------------------------------------

std::map<int, int> perm_of_type(const IntPartition& alpha) {
    std::map<int, int> sigma;
    int start = 0;
    for (int part : alpha) {
        for (int i = 0; i < part; ++i)
            sigma[start + i] = start + (i + 1) % part;
        start += part;
    }
    return sigma;
}

SymFn cycle_index(const Species& s, int n_max) {
    if (n_max > kEnumerationGuard) throw error("cycle_index: guard exceeded");
    SymFn z(n_max);
    for (int n = 0; n <= n_max; ++n) {
        auto all = s.on_n(n);
        for (const auto& alpha : partitions_of(n)) {
            auto sigma = perm_of_type(alpha);
            long fixed = 0;
            for (const auto& st : all)
                if (relabel(sigma, st) == st) ++fixed;
            if (fixed != 0)
                z.add_term(alpha, Rational(fixed) / Rational(z_of(alpha)));
        }
    }
    return z;
}

Egf species_egf(const Species& s, int n_max) {
    Egf f(n_max);
    for (int n = 0; n <= n_max; ++n)
        f.at(n) = Rational(static_cast<long>(s.on_n(n).size()));
    return f;
}

}  // namespace ksp
