#include "ksp/symfun.hpp"

namespace ksp {

namespace {
void require_same_trunc(const SymFn& f, const SymFn& g) {
    if (f.trunc() != g.trunc()) throw error("symfn: truncation mismatch");
}
}  // namespace

SymFn sf_zero(int trunc) { return SymFn(trunc); }

SymFn sf_one(int trunc) {
    SymFn f(trunc);
    f.add_term({}, 1);
    return f;
}

SymFn sf_p(const IntPartition& p, int trunc) {
    SymFn f(trunc);
    f.add_term(p, 1);
    return f;
}

SymFn sf_h(int n, int trunc) {
    if (n > trunc) throw error("symfn: h_n beyond truncation");
    SymFn f(trunc);
    for (const auto& lam : partitions_of(n))
        f.add_term(lam, Rational(1) / Rational(z_of(lam)));
    return f;
}

SymFn sf_e(int n, int trunc) {
    if (n > trunc) throw error("symfn: e_n beyond truncation");
    SymFn f(trunc);
    for (const auto& lam : partitions_of(n)) {
        Rational c = Rational(1) / Rational(z_of(lam));
        if ((n - partition_length(lam)) % 2 != 0) c = -c;
        f.add_term(lam, c);
    }
    return f;
}

SymFn sf_ch_E(int trunc) {
    SymFn f(trunc);
    for (int n = 0; n <= trunc; ++n) {
        SymFn hn = sf_h(n, trunc);
        for (const auto& [p, v] : hn.coeffs()) f.add_term(p, v);
    }
    return f;
}

SymFn sf_ch_L(int trunc) {
    SymFn f(trunc);
    IntPartition ones;
    for (int n = 0; n <= trunc; ++n) {
        f.add_term(ones, 1);
        ones.push_back(1);
    }
    return f;
}

SymFn sf_add(const SymFn& f, const SymFn& g) {
    require_same_trunc(f, g);
    SymFn out(f.trunc());
    for (const auto& [p, v] : f.coeffs()) out.add_term(p, v);
    for (const auto& [p, v] : g.coeffs()) out.add_term(p, v);
    return out;
}

SymFn sf_sub(const SymFn& f, const SymFn& g) {
    require_same_trunc(f, g);
    SymFn out(f.trunc());
    for (const auto& [p, v] : f.coeffs()) out.add_term(p, v);
    for (const auto& [p, v] : g.coeffs()) out.add_term(p, -v);
    return out;
}

SymFn sf_scale(const Rational& a, const SymFn& f) {
    SymFn out(f.trunc());
    for (const auto& [p, v] : f.coeffs()) out.add_term(p, a * v);
    return out;
}

SymFn sf_mul(const SymFn& f, const SymFn& g) {
    require_same_trunc(f, g);
    SymFn out(f.trunc());
    for (const auto& [p, v] : f.coeffs()) {
        int dp = partition_size(p);
        for (const auto& [q, w] : g.coeffs()) {
            if (dp + partition_size(q) > f.trunc()) break;  // keys are graded
            out.add_term(partition_union(p, q), v * w);
        }
    }
    return out;
}

SymFn sf_plethysm(const SymFn& f, const SymFn& g) {
    require_same_trunc(f, g);
    if (g.coeff({}) != 0)
        throw error("symfn: plethysm needs zero constant term on the right");
    int N = f.trunc();
    // p_n * g: every p_m in g becomes p_{nm}
    auto stretch = [&](int n) {
        SymFn r(N);
        for (const auto& [p, v] : g.coeffs()) {
            IntPartition q;
            for (int part : p) q.push_back(part * n);
            r.add_term(q, v);
        }
        return r;
    };
    SymFn out(N);
    for (const auto& [p, v] : f.coeffs()) {
        SymFn term = sf_one(N);
        bool dead = false;
        for (int part : p) {
            term = sf_mul(term, stretch(part));
            if (term.coeffs().empty()) { dead = true; break; }
        }
        if (dead) continue;
        for (const auto& [q, w] : term.coeffs()) out.add_term(q, v * w);
    }
    return out;
}

SymFn sf_internal(const SymFn& f, const SymFn& g) {
    require_same_trunc(f, g);
    SymFn out(f.trunc());
    for (const auto& [p, v] : f.coeffs()) {
        Rational w = g.coeff(p);
        if (w != 0) out.add_term(p, v * w * Rational(z_of(p)));
    }
    return out;
}

SymFn sf_plethystic_inverse(const SymFn& g) {
    IntPartition p1 = {1};
    if (g.coeff({}) != 0 || g.coeff(p1) != 1)
        throw error("symfn: plethystic inverse needs leading term p_1");
    for (const auto& [p, v] : g.coeffs())
        if (partition_size(p) < 2 && p != p1)
            throw error("symfn: plethystic inverse needs leading term p_1");
    int N = g.trunc();
    // g = p_1 + g2p; h = p_1 - g2p * h stabilizes degree by degree.
    SymFn g2p(N);
    for (const auto& [p, v] : g.coeffs())
        if (partition_size(p) >= 2) g2p.add_term(p, v);
    SymFn h = sf_p(p1, N);
    for (int it = 0; it <= N; ++it)
        h = sf_sub(sf_p(p1, N), sf_plethysm(g2p, h));
    return h;
}

SymFn sf_mul_inverse(const SymFn& f) {
    Rational c0 = f.coeff({});
    if (c0 == 0) throw error("symfn: inverse needs a nonzero constant term");
    int N = f.trunc();
    SymFn g(N);
    g.add_term({}, 1 / c0);
    for (int n = 1; n <= N; ++n) {
        // kill the degree-n part of f * g
        SymFn acc(N);
        for (int i = 1; i <= n; ++i)
            acc = sf_add(acc, sf_mul(f.degree_part(i), g.degree_part(n - i)));
        SymFn part = acc.degree_part(n);
        for (const auto& [p, v] : part.coeffs())
            g.add_term(p, Rational(-v / c0));
    }
    return g;
}

SymFn sf_sign_twist(const SymFn& f) {
    SymFn out(f.trunc());
    for (const auto& [p, v] : f.coeffs())
        out.add_term(p, (partition_length(p) % 2 == 0) ? v : -v);
    return out;
}

Egf sf_to_egf(const SymFn& f) {
    Egf r(f.trunc());
    for (const auto& [p, v] : f.coeffs()) {
        bool all_ones = true;
        for (int part : p)
            if (part != 1) { all_ones = false; break; }
        if (!all_ones) continue;
        int n = partition_length(p);
        r.at(n) += v * Rational(factorial(n));
    }
    return r;
}

std::vector<Rational> sf_hilbert(const std::vector<SymFn>& f_by_weight, int n) {
    std::vector<Rational> out;
    out.reserve(f_by_weight.size());
    for (const SymFn& f : f_by_weight) {
        Rational s = 0;
        for (const auto& [p, v] : f.coeffs()) {
            Rational t = v;
            for (size_t i = 0; i < p.size(); ++i) t *= n;
            s += t;
        }
        out.push_back(s);
    }
    return out;
}

std::string sf_str(const SymFn& f) {
    if (f.coeffs().empty()) return "0";
    std::string s;
    for (const auto& [p, v] : f.coeffs()) {
        if (!s.empty()) s += " + ";
        s += rat_str(v) + "*p" + partition_str(p);
    }
    return s;
}

}  // namespace ksp
