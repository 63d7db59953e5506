#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "ksp/schur.hpp"
#include "ksp/symfun.hpp"
#include "oracles.hpp"

using namespace ksp;

namespace {

// Permutation with cycle type alpha on {0..n-1}: consecutive cycles.
std::vector<int> perm_of_type(const IntPartition& alpha) {
    std::vector<int> sigma;
    int start = 0;
    for (int part : alpha) {
        for (int i = 0; i < part; ++i)
            sigma.push_back(start + (i + 1) % part);
        start += part;
    }
    return sigma;
}

// Fixed set partitions of [n] under the canonical permutation of type alpha.
long long fixed_set_partitions(const IntPartition& alpha) {
    int n = partition_size(alpha);
    auto sigma = perm_of_type(alpha);
    long long count = 0;
    oracle::for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
        // image partition == original partition?
        std::vector<int> owner(n);
        for (size_t b = 0; b < blocks.size(); ++b)
            for (int x : blocks[b]) owner[x] = static_cast<int>(b);
        for (const auto& block : blocks) {
            int img_owner = owner[sigma[block[0]]];
            for (int x : block)
                if (owner[sigma[x]] != img_owner) return;
        }
        ++count;
    });
    return count;
}

}  // namespace

TEST_CASE("h and e constructors") {
    int N = 6;
    SymFn h2 = sf_h(2, N);
    CHECK(h2.coeff({2}) == rat(1, 2));
    CHECK(h2.coeff({1, 1}) == rat(1, 2));
    SymFn e2 = sf_e(2, N);
    CHECK(e2.coeff({2}) == rat(-1, 2));
    CHECK(e2.coeff({1, 1}) == rat(1, 2));
    CHECK(sf_h(0, N) == sf_one(N));
    CHECK(sf_e(0, N) == sf_one(N));
    CHECK_THROWS_AS(sf_h(7, 6), error);
}

TEST_CASE("mul") {
    int N = 6;
    SymFn p1 = sf_p({1}, N);
    CHECK(sf_mul(p1, p1) == sf_p({1, 1}, N));
    CHECK(sf_mul(sf_h(1, N), sf_h(1, N)) ==
          sf_add(sf_h(2, N), sf_e(2, N)));
    // (sum h_n) * (sum (-1)^k e_k) = 1
    SymFn he = sf_one(N);
    SymFn esum(N);
    for (int k = 0; k <= N; ++k)
        esum = sf_add(esum, sf_scale((k % 2 == 0) ? 1 : -1, sf_e(k, N)));
    CHECK(sf_mul(sf_ch_E(N), esum) == sf_one(N));
}

TEST_CASE("plethysm") {
    int N = 6;
    CHECK(sf_plethysm(sf_p({2}, N), sf_p({3}, N)) == sf_p({6}, N));
    SymFn f = sf_ch_E(N);
    CHECK(sf_plethysm(f, sf_p({1}, N)) == f);

    // Ch E o Ch E_+ = cycle index of set partitions, degree <= 4
    int M = 4;
    SymFn chE = sf_ch_E(M);
    SymFn chEp = chE;
    chEp = sf_sub(chEp, sf_one(M));
    SymFn part_ch = sf_plethysm(chE, chEp);
    for (int n = 0; n <= M; ++n)
        for (const auto& alpha : partitions_of(n)) {
            Rational expect((long)fixed_set_partitions(alpha));
            // coefficient of p_alpha is |Fix|/z_alpha
            CHECK(part_ch.coeff(alpha) == expect / Rational(z_of(alpha)));
        }
    CHECK_THROWS_AS(sf_plethysm(chE, chE), error);
}

TEST_CASE("internal product") {
    int N = 5;
    IntPartition lam = {2, 1};
    SymFn idem = sf_scale(Rational(1) / Rational(z_of(lam)), sf_p(lam, N));
    CHECK(sf_internal(idem, idem) == idem);
    CHECK(sf_internal(sf_p({2}, N), sf_p({1, 1}, N)) == sf_zero(N));
    // h_n is the internal identity on degree n
    SymFn mixed = sf_add(sf_ch_E(N), sf_p({2, 1}, N));
    for (int n = 0; n <= N; ++n) {
        SymFn hn = sf_h(n, N);
        CHECK(sf_internal(hn, mixed) == mixed.degree_part(n));
    }
}

TEST_CASE("plethystic inverse") {
    int N = 6;
    SymFn p1 = sf_p({1}, N);
    CHECK(sf_plethystic_inverse(p1) == p1);

    // Ch E^bullet = p_1 * Ch E; its inverse must satisfy the roundtrip
    SymFn chEdot = sf_mul(p1, sf_ch_E(N));
    SymFn inv = sf_plethystic_inverse(chEdot);
    CHECK(sf_plethysm(chEdot, inv) == p1);
    CHECK(sf_plethysm(inv, chEdot) == p1);

    // dimensions: exponential specialization must give (x e^x)^<-1>
    Egf xex = egf_pointing(Egf::exp(N));
    CHECK(sf_to_egf(inv) == egf_comp_inverse(xex));
    CHECK_THROWS_AS(sf_plethystic_inverse(sf_ch_E(N)), error);
}

TEST_CASE("sign twist") {
    int N = 5;
    SymFn twisted = sf_sign_twist(sf_ch_E(N));
    SymFn esum(N);
    for (int k = 0; k <= N; ++k)
        esum = sf_add(esum, sf_scale((k % 2 == 0) ? 1 : -1, sf_e(k, N)));
    CHECK(twisted == esum);
    CHECK(sf_sign_twist(sf_p({1}, N)) == sf_scale(-1, sf_p({1}, N)));
    CHECK(sf_sign_twist(twisted) == sf_ch_E(N));
}

TEST_CASE("to_egf and hilbert") {
    int N = 6;
    CHECK(sf_to_egf(sf_ch_E(N)) == Egf::exp(N));
    CHECK(sf_to_egf(sf_ch_L(N)) == Egf::linear_orders(N));

    // hilbert of E graded by degree at n = 1: all ones
    std::vector<SymFn> by_weight;
    for (int k = 0; k <= 4; ++k) by_weight.push_back(sf_h(k, 4));
    auto hs = sf_hilbert(by_weight, 1);
    for (const auto& v : hs) CHECK(v == 1);

    // hilbert of Lambda at n = 2: e_k(1,1) = C(2,k)
    std::vector<SymFn> lam_w;
    for (int k = 0; k <= 2; ++k) lam_w.push_back(sf_e(k, 2));
    auto ls = sf_hilbert(lam_w, 2);
    CHECK(ls[0] == 1);
    CHECK(ls[1] == 2);
    CHECK(ls[2] == 1);
}

TEST_CASE("homomorphism properties") {
    int N = 6;
    SymFn a = sf_add(sf_ch_E(N), sf_p({2, 2}, N));
    SymFn b = sf_add(sf_ch_L(N), sf_p({3}, N));
    CHECK(sf_to_egf(sf_mul(a, b)) == egf_mul(sf_to_egf(a), sf_to_egf(b)));
    CHECK(sf_to_egf(sf_internal(a, b)) ==
          egf_hadamard(sf_to_egf(a), sf_to_egf(b)));
    SymFn c(N);
    for (const auto& [p, v] : b.coeffs())
        if (partition_size(p) >= 1) c.add_term(p, v);
    CHECK(sf_to_egf(sf_plethysm(a, c)) ==
          egf_compose(sf_to_egf(a), sf_to_egf(c)));
}

TEST_CASE("Murnaghan-Nakayama characters") {
    // S_3 character table, hand values
    CHECK(sn_character({3}, {1, 1, 1}) == 1);
    CHECK(sn_character({3}, {2, 1}) == 1);
    CHECK(sn_character({3}, {3}) == 1);
    CHECK(sn_character({1, 1, 1}, {1, 1, 1}) == 1);
    CHECK(sn_character({1, 1, 1}, {2, 1}) == -1);
    CHECK(sn_character({1, 1, 1}, {3}) == 1);
    CHECK(sn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(sn_character({2, 1}, {2, 1}) == 0);
    CHECK(sn_character({2, 1}, {3}) == -1);

    // dimension chi^lambda(1^n) from hook length formula, n <= 6
    for (int n = 1; n <= 6; ++n) {
        IntPartition ones(n, 1);
        for (const auto& lam : partitions_of(n)) {
            Integer hooks = 1;
            for (int i = 0; i < (int)lam.size(); ++i)
                for (int j = 0; j < lam[i]; ++j) {
                    int arm = lam[i] - j - 1;
                    int leg = 0;
                    for (int r = i + 1; r < (int)lam.size(); ++r)
                        if (lam[r] > j) ++leg;
                    hooks *= arm + leg + 1;
                }
            CHECK(Rational(sn_character(lam, ones)) ==
                  Rational(factorial(n)) / Rational(hooks));
        }
    }

    // column orthogonality at the identity: sum_lam dim^2 = n!
    for (int n = 1; n <= 6; ++n) {
        IntPartition ones(n, 1);
        Integer s = 0;
        for (const auto& lam : partitions_of(n)) {
            Integer d = sn_character(lam, ones);
            s += d * d;
        }
        CHECK(s == factorial(n));
    }
}

TEST_CASE("schur expansion") {
    int N = 5;
    // h_n = s_(n); e_n = s_(1^n)
    for (int n = 1; n <= N; ++n) {
        auto sh = schur_coefficients(sf_h(n, N), n);
        CHECK(sh.size() == 1);
        CHECK(sh.begin()->first == IntPartition{n});
        CHECK(sh.begin()->second == 1);
        auto se = schur_coefficients(sf_e(n, N), n);
        CHECK(se.size() == 1);
        CHECK(se.begin()->first == IntPartition(n, 1));
        CHECK(se.begin()->second == 1);
    }
    CHECK(is_schur_nonneg(sf_ch_E(N)));
    CHECK(is_schur_nonneg(sf_ch_L(N)));
    CHECK_FALSE(is_schur_nonneg(sf_scale(-1, sf_h(2, 3))));
}
