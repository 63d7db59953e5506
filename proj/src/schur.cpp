#include "ksp/schur.hpp"

#include <algorithm>

namespace ksp {

namespace {

// Murnaghan-Nakayama via beta-numbers: with beta_i = lambda_i + (m-1-i),
// removing a border strip of size t means replacing some beta by beta - t
// (when beta - t is fresh and non-negative); the strip height is the number
// of betas strictly between the old and new value.
Integer mn_rec(IntPartition lambda, IntPartition mu,
               std::map<std::pair<IntPartition, IntPartition>, Integer>& memo) {
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    if (lambda.empty()) return 0;
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int t = mu.front();
    IntPartition mu_rest(mu.begin() + 1, mu.end());
    int m = static_cast<int>(lambda.size());
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);

    Integer total = 0;
    for (int i = 0; i < m; ++i) {
        int nb = beta[i] - t;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int height = 0;
        for (int j = 0; j < m; ++j)
            if (j != i && nb < beta[j] && beta[j] < beta[i]) ++height;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        IntPartition nl(m);
        for (int j = 0; j < m; ++j) nl[j] = nbeta[j] - (m - 1 - j);
        Integer sub = mn_rec(nl, mu_rest, memo);
        if (height % 2 == 0) total += sub;
        else total -= sub;
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace

Integer sn_character(const IntPartition& lambda, const IntPartition& mu) {
    if (partition_size(lambda) != partition_size(mu))
        throw error("schur: size mismatch in character");
    thread_local std::map<std::pair<IntPartition, IntPartition>, Integer> memo;
    return mn_rec(lambda, mu, memo);
}

std::map<IntPartition, Rational, PartitionCmp> schur_coefficients(const SymFn& f,
                                                                  int n) {
    std::map<IntPartition, Rational, PartitionCmp> out;
    for (const auto& lambda : partitions_of(n)) {
        Rational c = 0;
        for (const auto& [mu, v] : f.coeffs()) {
            if (partition_size(mu) != n) continue;
            c += v * Rational(sn_character(lambda, mu));
        }
        if (c != 0) out.emplace(lambda, c);
    }
    return out;
}

bool is_schur_nonneg(const SymFn& f) {
    for (int n = 0; n <= f.trunc(); ++n) {
        for (const auto& [lam, c] : schur_coefficients(f, n)) {
            if (c < 0) return false;
            if (c.get_den() != 1) return false;
        }
    }
    return true;
}

}  // namespace ksp
