#include "ksp/homology.hpp"

#include <algorithm>

namespace ksp {

ChainComplex order_complex(const Poset& p) {
    ChainComplex c;
    auto mins = p.minimal_elements();
    auto maxs = p.maximal_elements();
    std::vector<char> is_max(p.size(), 0);
    for (int m : maxs) is_max[m] = 1;

    // enumerate all min-to-max chains by DFS
    std::vector<std::vector<std::vector<int>>> chains;  // by length
    std::vector<int> path;
    std::function<void(int)> dfs = [&](int last) {
        if (is_max[last]) {
            int l = static_cast<int>(path.size()) - 1;
            if (static_cast<int>(chains.size()) <= l) chains.resize(l + 1);
            chains[l].push_back(path);
        }
        for (int next = 0; next < p.size(); ++next) {
            if (next == last || !p.le(last, next)) continue;
            path.push_back(next);
            dfs(next);
            path.pop_back();
        }
    };
    for (int m : mins) {
        path = {m};
        dfs(m);
    }
    for (auto& level : chains) std::sort(level.begin(), level.end());
    c.chains = std::move(chains);

    // boundary: delete interior elements with alternating signs
    c.boundary.resize(c.chains.size());
    for (int l = 1; l <= c.top(); ++l) {
        std::map<std::vector<int>, int> index_below;
        for (size_t i = 0; i < c.chains[l - 1].size(); ++i)
            index_below.emplace(c.chains[l - 1][i], static_cast<int>(i));
        for (size_t col = 0; col < c.chains[l].size(); ++col) {
            const auto& ch = c.chains[l][col];
            for (int i = 1; i <= l - 1; ++i) {
                std::vector<int> face;
                face.reserve(l);
                for (int j = 0; j <= l; ++j)
                    if (j != i) face.push_back(ch[j]);
                auto it = index_below.find(face);
                if (it == index_below.end())
                    throw error("order complex: missing face");
                int sign = (i % 2 == 1) ? 1 : -1;
                c.boundary[l].emplace_back(it->second, static_cast<int>(col),
                                           sign);
            }
        }
    }

    // d o d = 0
    for (int l = 2; l <= c.top(); ++l) {
        std::map<std::pair<int, int>, long> comp;
        std::map<int, std::vector<std::pair<int, int>>> lower;  // col -> entries
        for (const auto& [r, cc, v] : c.boundary[l - 1])
            lower[cc].emplace_back(r, v);
        for (const auto& [r, cc, v] : c.boundary[l])
            for (const auto& [r2, v2] : lower[r])
                comp[{r2, cc}] += static_cast<long>(v) * v2;
        for (const auto& [rc, v] : comp)
            if (v != 0) throw error("order complex: d^2 != 0");
    }
    return c;
}

long matrix_rank(const std::vector<std::tuple<int, int, int>>& triplets,
                 long rows, long cols) {
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, 0));
    for (const auto& [r, c, v] : triplets) a[r][c] += v;
    long rank = 0;
    long row = 0;
    for (long col = 0; col < cols && row < rows; ++col) {
        long pivot = -1;
        for (long r = row; r < rows; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[row], a[pivot]);
        Rational inv = 1 / a[row][col];
        for (long r = row + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] * inv;
            for (long cc = col; cc < cols; ++cc) a[r][cc] -= f * a[row][cc];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<long> homology_ranks(const ChainComplex& c) {
    int top = c.top();
    if (top < 0) return {};
    std::vector<long> rank_d(top + 2, 0);
    for (int l = 1; l <= top; ++l)
        rank_d[l] = matrix_rank(c.boundary[l], c.dim(l - 1), c.dim(l));
    std::vector<long> h(top + 1, 0);
    for (int l = 0; l <= top; ++l)
        h[l] = c.dim(l) - rank_d[l] - rank_d[l + 1];
    return h;
}

namespace {

// All maximal chains of the interval have the same length? Returns that
// common length, or -1 when lengths differ.
int pure_rank(const Poset& p, int x, int y) {
    // longest and shortest saturated x..y path via DP over the interval
    std::vector<int> idx;
    for (int i = 0; i < p.size(); ++i)
        if (p.le(x, i) && p.le(i, y)) idx.push_back(i);
    std::map<int, int> lo, hi;
    // process by down-set size
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int ca = 0, cb = 0;
        for (int z : idx) {
            if (p.le(z, a)) ++ca;
            if (p.le(z, b)) ++cb;
        }
        return ca < cb;
    });
    for (int z : idx) {
        if (z == x) { lo[z] = hi[z] = 0; continue; }
        int zlo = -1, zhi = -1;
        for (int w : idx) {
            if (w == z || !p.le(w, z)) continue;
            // w covered by z within the interval?
            bool covered = true;
            for (int v : idx)
                if (v != w && v != z && p.le(w, v) && p.le(v, z)) {
                    covered = false;
                    break;
                }
            if (!covered) continue;
            if (zlo < 0 || lo[w] + 1 < zlo) zlo = lo[w] + 1;
            if (hi[w] + 1 > zhi) zhi = hi[w] + 1;
        }
        lo[z] = zlo;
        hi[z] = zhi;
    }
    if (lo[y] != hi[y]) return -1;
    return lo[y];
}

}  // namespace

CmCertificate cohen_macaulay_check(const Poset& p) {
    CmCertificate cert;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            if (!p.le(x, y)) continue;
            ++cert.intervals_checked;
            int r = pure_rank(p, x, y);
            if (r < 0) {
                cert.graded = false;
                cert.pass = false;
                cert.offender = "interval [" + p.elems[x].str() + ", " +
                                p.elems[y].str() + "] is not pure";
                return cert;
            }
            Poset iv = interval(p, x, y);
            auto h = homology_ranks(order_complex(iv));
            for (int l = 0; l < static_cast<int>(h.size()); ++l)
                if (l != r && h[l] != 0) {
                    cert.pass = false;
                    cert.offender = "interval [" + p.elems[x].str() + ", " +
                                    p.elems[y].str() + "] has H_" +
                                    std::to_string(l) + " = " +
                                    std::to_string(h[l]) + " off rank " +
                                    std::to_string(r);
                    return cert;
                }
        }
    return cert;
}

}  // namespace ksp
