#include "ksp/egf.hpp"

namespace ksp {

namespace {

void require_same_trunc(const Egf& f, const Egf& g) {
    if (f.trunc() != g.trunc())
        throw error("egf: truncation mismatch (" + std::to_string(f.trunc()) +
                    " vs " + std::to_string(g.trunc()) + ")");
}

// Ordinary coefficients b_n = c_n / n!; most algorithms are simpler there.
std::vector<Rational> ordinary(const Egf& f) {
    std::vector<Rational> b(f.trunc() + 1);
    for (int n = 0; n <= f.trunc(); ++n)
        b[n] = f[n] / Rational(factorial(n));
    return b;
}

Egf from_ordinary(int trunc, const std::vector<Rational>& b) {
    Egf f(trunc);
    for (int n = 0; n <= trunc; ++n) f.at(n) = b[n] * Rational(factorial(n));
    return f;
}

std::vector<Rational> ord_mul(const std::vector<Rational>& a,
                              const std::vector<Rational>& b, int trunc) {
    std::vector<Rational> r(trunc + 1, 0);
    for (int i = 0; i <= trunc; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= trunc; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// f(g) for ordinary series, g_0 = 0 assumed.
std::vector<Rational> ord_compose(const std::vector<Rational>& f,
                                  const std::vector<Rational>& g, int trunc) {
    std::vector<Rational> r(trunc + 1, 0);
    std::vector<Rational> gpow(trunc + 1, 0);
    gpow[0] = 1;  // g^0
    r[0] = f[0];
    for (int n = 1; n <= trunc; ++n) {
        gpow = ord_mul(gpow, g, trunc);
        if (f[n] == 0) continue;
        for (int m = 0; m <= trunc; ++m) r[m] += f[n] * gpow[m];
    }
    return r;
}

std::vector<Rational> ord_mul_inverse(const std::vector<Rational>& f, int trunc) {
    std::vector<Rational> g(trunc + 1, 0);
    Rational inv0 = 1 / f[0];
    g[0] = inv0;
    for (int n = 1; n <= trunc; ++n) {
        Rational s = 0;
        for (int i = 1; i <= n; ++i) s += f[i] * g[n - i];
        g[n] = -inv0 * s;
    }
    return g;
}

}  // namespace

Egf egf_add(const Egf& f, const Egf& g) {
    require_same_trunc(f, g);
    Egf r(f.trunc());
    for (int n = 0; n <= f.trunc(); ++n) r.at(n) = f[n] + g[n];
    return r;
}

Egf egf_sub(const Egf& f, const Egf& g) {
    require_same_trunc(f, g);
    Egf r(f.trunc());
    for (int n = 0; n <= f.trunc(); ++n) r.at(n) = f[n] - g[n];
    return r;
}

Egf egf_neg(const Egf& f) {
    Egf r(f.trunc());
    for (int n = 0; n <= f.trunc(); ++n) r.at(n) = -f[n];
    return r;
}

Egf egf_scale(const Rational& a, const Egf& f) {
    Egf r(f.trunc());
    for (int n = 0; n <= f.trunc(); ++n) r.at(n) = a * f[n];
    return r;
}

Egf egf_mul(const Egf& f, const Egf& g) {
    require_same_trunc(f, g);
    int N = f.trunc();
    Egf r(N);
    for (int n = 0; n <= N; ++n) {
        Rational s = 0;
        for (int i = 0; i <= n; ++i) {
            if (f[i] == 0 || g[n - i] == 0) continue;
            s += Rational(binomial(n, i)) * f[i] * g[n - i];
        }
        r.at(n) = s;
    }
    return r;
}

Egf egf_hadamard(const Egf& f, const Egf& g) {
    require_same_trunc(f, g);
    Egf r(f.trunc());
    for (int n = 0; n <= f.trunc(); ++n) r.at(n) = f[n] * g[n];
    return r;
}

Egf egf_compose(const Egf& f, const Egf& g) {
    require_same_trunc(f, g);
    if (g[0] != 0) throw error("egf: composition needs zero constant term");
    return from_ordinary(f.trunc(),
                         ord_compose(ordinary(f), ordinary(g), f.trunc()));
}

Egf egf_mul_inverse(const Egf& f) {
    if (f[0] == 0) throw error("egf: not invertible, zero constant term");
    return from_ordinary(f.trunc(), ord_mul_inverse(ordinary(f), f.trunc()));
}

Egf egf_comp_inverse(const Egf& f) {
    if (f[0] != 0 || f.trunc() < 1 || f[1] == 0)
        throw error("egf: compositional inverse needs c_0 = 0, c_1 != 0");
    int N = f.trunc();
    auto fb = ordinary(f);
    // f = f1 x + f2+(x); solve h = (x - f2+(h)) / f1 by iteration,
    // degree d stabilizes after d rounds.
    std::vector<Rational> f2p(fb);
    f2p[1] = 0;
    Rational inv1 = 1 / fb[1];
    std::vector<Rational> h(N + 1, 0);
    h[1] = inv1;
    for (int it = 0; it <= N; ++it) {
        auto t = ord_compose(f2p, h, N);
        for (int n = 0; n <= N; ++n) {
            Rational xn = (n == 1) ? Rational(1) : Rational(0);
            h[n] = inv1 * (xn - t[n]);
        }
    }
    return from_ordinary(N, h);
}

Egf egf_derivative(const Egf& f) {
    if (f.trunc() == 0)
        throw error("egf: cannot differentiate at truncation 0");
    Egf r(f.trunc() - 1);
    for (int n = 0; n < f.trunc(); ++n) r.at(n) = f[n + 1];
    return r;
}

Egf egf_pointing(const Egf& f) {
    Egf r(f.trunc());
    for (int n = 0; n <= f.trunc(); ++n) r.at(n) = Rational(n) * f[n];
    return r;
}

Egf egf_solve_tree_fixed_point(const Egf& m, FixedPointKind kind) {
    int N = m.trunc();
    auto mb = ordinary(m);
    std::vector<Rational> a(N + 1, 0);
    if (kind == FixedPointKind::rooted) {
        if (m[0] != 1) throw error("egf: rooted fixed point needs c_0 = 1");
        // A = x * m(A)
        for (int it = 0; it <= N; ++it) {
            auto ma = ord_compose(mb, a, N);
            std::vector<Rational> next(N + 1, 0);
            for (int n = 1; n <= N; ++n) next[n] = ma[n - 1];
            a = std::move(next);
        }
    } else {
        if (m[0] != 0 || (N >= 1 && m[1] != 0))
            throw error("egf: schroeder fixed point needs c_0 = c_1 = 0");
        // F = x + G2p(F)
        for (int it = 0; it <= N; ++it) {
            auto ga = ord_compose(mb, a, N);
            if (N >= 1) ga[1] += 1;
            a = std::move(ga);
        }
    }
    return from_ordinary(N, a);
}

Egf graded_euler(const GradedEgf& g) {
    Egf r(g.trunc);
    for (const auto& [nk, v] : g.coeffs) {
        auto [n, k] = nk;
        r.at(n) += (k % 2 == 0) ? v : -v;
    }
    return r;
}

}  // namespace ksp
