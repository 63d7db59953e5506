#pragma once

#include <map>

#include "ksp/egf.hpp"
#include "ksp/partition.hpp"

namespace ksp {

// Symmetric function truncated by degree, stored in the power-sum basis.
class SymFn {
public:
    using Map = std::map<IntPartition, Rational, PartitionCmp>;

    explicit SymFn(int trunc) : trunc_(check(trunc)) {}

    int trunc() const { return trunc_; }
    const Map& coeffs() const { return c_; }

    Rational coeff(const IntPartition& p) const {
        auto it = c_.find(p);
        return it == c_.end() ? Rational(0) : it->second;
    }

    // Adds v * p_lambda, dropping terms beyond the truncation and zeros.
    void add_term(const IntPartition& p, const Rational& v) {
        if (!is_partition(p)) throw error("symfn: malformed partition key");
        if (partition_size(p) > trunc_) return;
        auto it = c_.find(p);
        if (it == c_.end()) {
            if (v != 0) c_.emplace(p, v);
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    bool operator==(const SymFn& o) const = default;

    // Homogeneous component of degree n.
    SymFn degree_part(int n) const {
        SymFn r(trunc_);
        for (const auto& [p, v] : c_)
            if (partition_size(p) == n) r.add_term(p, v);
        return r;
    }

private:
    static int check(int t) {
        if (t < 0) throw error("symfn: negative truncation");
        return t;
    }
    int trunc_;
    Map c_;
};

SymFn sf_zero(int trunc);
SymFn sf_one(int trunc);
SymFn sf_p(const IntPartition& p, int trunc);
// h_n = sum_{lambda |- n} p_lambda / z_lambda
SymFn sf_h(int n, int trunc);
// e_n = sum_{lambda |- n} (-1)^{n - l(lambda)} p_lambda / z_lambda
SymFn sf_e(int n, int trunc);
// Ch E = sum_n h_n, Ch L = sum_n p_1^n, truncated
SymFn sf_ch_E(int trunc);
SymFn sf_ch_L(int trunc);

SymFn sf_add(const SymFn& f, const SymFn& g);
SymFn sf_sub(const SymFn& f, const SymFn& g);
SymFn sf_scale(const Rational& a, const SymFn& f);
SymFn sf_mul(const SymFn& f, const SymFn& g);
// Plethysm f * g; g must have zero constant term.
SymFn sf_plethysm(const SymFn& f, const SymFn& g);
// Internal (Kronecker) product: p_lambda . p_mu = delta z_lambda p_lambda.
SymFn sf_internal(const SymFn& f, const SymFn& g);
// Inverse under plethysm for g = p_1 + higher.
SymFn sf_plethystic_inverse(const SymFn& g);
// Inverse under the product; f must have a nonzero constant term.
SymFn sf_mul_inverse(const SymFn& f);
// p_lambda -> (-1)^{l(lambda)} p_lambda
SymFn sf_sign_twist(const SymFn& f);
// Exponential specialization p_1 -> x, p_k -> 0 (k >= 2).
Egf sf_to_egf(const SymFn& f);
// Principal specialization p_r -> n on each weight component; returns the
// coefficient of t^k for k = 0..len-1.
std::vector<Rational> sf_hilbert(const std::vector<SymFn>& f_by_weight, int n);

std::string sf_str(const SymFn& f);

}  // namespace ksp
