#pragma once

#include <tuple>

#include "ksp/poset.hpp"

namespace ksp {

// Order complex in the min-to-max chain convention: basis in degree l is the
// chains x_0 < ... < x_l with x_0 minimal and x_l maximal; the boundary
// deletes interior elements only:
//   d(x_0<...<x_l) = sum_{i=1}^{l-1} (-1)^{i-1} (x_0<...x_{i-1}<x_{i+1}...<x_l)
struct ChainComplex {
    // chains[l] = canonical list of chains of length l (element index paths)
    std::vector<std::vector<std::vector<int>>> chains;
    // boundary[l] : C_l -> C_{l-1}, sparse triplets (row, col, coeff)
    std::vector<std::vector<std::tuple<int, int, int>>> boundary;

    int top() const { return static_cast<int>(chains.size()) - 1; }
    long dim(int l) const {
        if (l < 0 || l > top()) return 0;
        return static_cast<long>(chains[l].size());
    }
};

ChainComplex order_complex(const Poset& p);

// Exact rank of a sparse integer matrix over Q.
long matrix_rank(const std::vector<std::tuple<int, int, int>>& triplets,
                 long rows, long cols);

// H_l = dim C_l - rank d_l - rank d_{l+1}; exact.
std::vector<long> homology_ranks(const ChainComplex& c);

struct CmCertificate {
    bool graded = true;
    bool pass = true;
    std::string offender;  // witness description on failure
    int intervals_checked = 0;
};

// Pass iff every closed interval of p is pure and has homology concentrated
// in its rank.
CmCertificate cohen_macaulay_check(const Poset& p);

}  // namespace ksp
