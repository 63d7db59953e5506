#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ksp/rational.hpp"

namespace ksp {

// Truncated exponential generating function F(x) = sum c_n x^n/n!,
// coefficients stored as the c_n (structure counts / dimensions).
class Egf {
public:
    explicit Egf(int trunc) : trunc_(check_trunc(trunc)), c_(trunc + 1, 0) {}
    Egf(int trunc, std::vector<Rational> coeffs)
        : trunc_(check_trunc(trunc)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != trunc_ + 1)
            throw error("egf: coefficient count does not match truncation");
    }

    int trunc() const { return trunc_; }
    const Rational& operator[](int n) const { return c_.at(n); }
    Rational& at(int n) { return c_.at(n); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const Egf& o) const = default;

    static Egf zero(int trunc) { return Egf(trunc); }
    static Egf one(int trunc) {
        Egf f(trunc);
        f.at(0) = 1;
        return f;
    }
    static Egf x(int trunc) {
        Egf f(trunc);
        if (trunc >= 1) f.at(1) = 1;
        return f;
    }
    // e^x: one structure of every size
    static Egf exp(int trunc) {
        Egf f(trunc);
        for (int n = 0; n <= trunc; ++n) f.at(n) = 1;
        return f;
    }
    // L(x) = 1/(1-x): c_n = n!
    static Egf linear_orders(int trunc) {
        Egf f(trunc);
        for (int n = 0; n <= trunc; ++n) f.at(n) = Rational(factorial(n));
        return f;
    }

private:
    static int check_trunc(int t) {
        if (t < 0) throw error("egf: negative truncation");
        return t;
    }
    int trunc_;
    std::vector<Rational> c_;
};

Egf egf_add(const Egf& f, const Egf& g);
Egf egf_sub(const Egf& f, const Egf& g);
Egf egf_neg(const Egf& f);
Egf egf_scale(const Rational& a, const Egf& f);
Egf egf_mul(const Egf& f, const Egf& g);
Egf egf_hadamard(const Egf& f, const Egf& g);
Egf egf_compose(const Egf& f, const Egf& g);
Egf egf_mul_inverse(const Egf& f);
Egf egf_comp_inverse(const Egf& f);
Egf egf_derivative(const Egf& f);
Egf egf_pointing(const Egf& f);

enum class FixedPointKind { schroeder, rooted };
// schroeder: F = x + G2p(F) where m = G2p has c_0 = c_1 = 0;
// rooted:    A = x * m(A)   where m has c_0 = 1.
Egf egf_solve_tree_fixed_point(const Egf& m, FixedPointKind kind);

// Graded series: coefficient c_{n,k} in homogeneous degree n, weight k.
struct GradedEgf {
    int trunc = 0;
    std::map<std::pair<int, int>, Rational> coeffs;

    void add(int n, int k, const Rational& v) {
        if (n < 0 || n > trunc || k < 0) throw error("graded egf: bad support");
        auto key = std::make_pair(n, k);
        auto it = coeffs.find(key);
        if (it == coeffs.end()) {
            if (v != 0) coeffs.emplace(key, v);
        } else {
            it->second += v;
            if (it->second == 0) coeffs.erase(it);
        }
    }
};

// c_n = sum_k (-1)^k c_{n,k}
Egf graded_euler(const GradedEgf& g);

}  // namespace ksp
