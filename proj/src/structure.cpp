#include "ksp/structure.hpp"

#include <algorithm>

namespace ksp {

Structure Structure::set(std::vector<Structure> xs) {
    Structure s;
    s.kind = Kind::set;
    std::sort(xs.begin(), xs.end());
    s.items = std::move(xs);
    return s;
}

int structure_cmp(const Structure& a, const Structure& b) {
    if (a.kind != b.kind)
        return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
    if (a.kind == Structure::Kind::atom)
        return a.label < b.label ? -1 : (a.label > b.label ? 1 : 0);
    size_t n = std::min(a.items.size(), b.items.size());
    for (size_t i = 0; i < n; ++i) {
        int c = structure_cmp(a.items[i], b.items[i]);
        if (c != 0) return c;
    }
    if (a.items.size() != b.items.size())
        return a.items.size() < b.items.size() ? -1 : 1;
    return 0;
}

bool Structure::operator==(const Structure& o) const {
    return structure_cmp(*this, o) == 0;
}

bool Structure::operator<(const Structure& o) const {
    return structure_cmp(*this, o) < 0;
}

std::string Structure::str() const {
    switch (kind) {
        case Kind::atom:
            return std::to_string(label);
        case Kind::set: {
            std::string s = "{";
            for (size_t i = 0; i < items.size(); ++i) {
                if (i) s += ",";
                s += items[i].str();
            }
            return s + "}";
        }
        case Kind::seq: {
            std::string s = "[";
            for (size_t i = 0; i < items.size(); ++i) {
                if (i) s += ",";
                s += items[i].str();
            }
            return s + "]";
        }
    }
    return "?";
}

namespace {
void collect(const Structure& s, std::vector<int>& out) {
    if (s.kind == Structure::Kind::atom) {
        out.push_back(s.label);
        return;
    }
    for (const auto& c : s.items) collect(c, out);
}
}  // namespace

std::vector<int> Structure::labels() const {
    std::vector<int> out;
    collect(*this, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Structure relabel(const std::map<int, int>& sigma, const Structure& s) {
    if (s.kind == Structure::Kind::atom) {
        auto it = sigma.find(s.label);
        if (it == sigma.end()) throw error("relabel: label not in bijection");
        return Structure::atom(it->second);
    }
    std::vector<Structure> kids;
    kids.reserve(s.items.size());
    for (const auto& c : s.items) kids.push_back(relabel(sigma, c));
    return s.kind == Structure::Kind::set ? Structure::set(std::move(kids))
                                          : Structure::seq(std::move(kids));
}

Structure substitute_atoms(const Structure& s,
                           const std::map<int, Structure>& sub) {
    if (s.kind == Structure::Kind::atom) {
        auto it = sub.find(s.label);
        return it == sub.end() ? s : it->second;
    }
    std::vector<Structure> kids;
    kids.reserve(s.items.size());
    for (const auto& c : s.items) kids.push_back(substitute_atoms(c, sub));
    return s.kind == Structure::Kind::set ? Structure::set(std::move(kids))
                                          : Structure::seq(std::move(kids));
}

}  // namespace ksp
