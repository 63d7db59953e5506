#include "ksp/partition.hpp"

#include <algorithm>
#include <map>

namespace ksp {

namespace {
void gen(int remaining, int max_part, IntPartition& cur,
         std::vector<IntPartition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen(remaining - part, part, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<IntPartition> partitions_of(int n) {
    std::vector<IntPartition> out;
    IntPartition cur;
    gen(n, n, cur, out);
    return out;
}

int partition_size(const IntPartition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Integer z_of(const IntPartition& p) {
    std::map<int, int> mult;
    for (int x : p) ++mult[x];
    Integer z = 1;
    for (auto [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        z *= factorial(m);
    }
    return z;
}

bool is_partition(const IntPartition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

IntPartition partition_union(const IntPartition& a, const IntPartition& b) {
    IntPartition r = a;
    r.insert(r.end(), b.begin(), b.end());
    std::sort(r.begin(), r.end(), std::greater<int>());
    return r;
}

bool PartitionCmp::operator()(const IntPartition& a, const IntPartition& b) const {
    int sa = partition_size(a), sb = partition_size(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

std::string partition_str(const IntPartition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace ksp
