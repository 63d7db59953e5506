#pragma once

#include <map>
#include <string>
#include <vector>

#include "ksp/rational.hpp"

namespace ksp {

// Canonical combinatorial object: nested atoms / sorted sets / ordered
// sequences. Equality is structural; set children are kept sorted so equal
// structures have byte-identical serializations.
struct Structure {
    enum class Kind { atom, set, seq };

    Kind kind = Kind::set;
    int label = -1;
    std::vector<Structure> items;

    static Structure atom(int l) {
        Structure s;
        s.kind = Kind::atom;
        s.label = l;
        return s;
    }
    static Structure set(std::vector<Structure> xs);
    static Structure seq(std::vector<Structure> xs) {
        Structure s;
        s.kind = Kind::seq;
        s.items = std::move(xs);
        return s;
    }

    bool operator==(const Structure& o) const;
    bool operator<(const Structure& o) const;

    std::string str() const;
    // Sorted list of atom labels occurring in the structure.
    std::vector<int> labels() const;
};

int structure_cmp(const Structure& a, const Structure& b);

// Apply a label bijection to every atom, re-canonicalizing sets.
Structure relabel(const std::map<int, int>& sigma, const Structure& s);

// Replace atom(l) by sub.at(l) wherever l is a key, re-canonicalizing sets.
Structure substitute_atoms(const Structure& s,
                           const std::map<int, Structure>& sub);

}  // namespace ksp
