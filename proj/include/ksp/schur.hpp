#pragma once

#include <map>

#include "ksp/symfun.hpp"

namespace ksp {

// Irreducible S_n character value chi^lambda(mu) by the Murnaghan-Nakayama
// rule, |lambda| = |mu|.
Integer sn_character(const IntPartition& lambda, const IntPartition& mu);

// Schur expansion of the degree-n component of f (given in the p-basis):
// coefficient of s_lambda is sum_mu c_mu chi^lambda(mu).
std::map<IntPartition, Rational, PartitionCmp> schur_coefficients(const SymFn& f,
                                                                  int n);

// True iff every Schur coefficient of every homogeneous component of f is a
// non-negative integer.
bool is_schur_nonneg(const SymFn& f);

}  // namespace ksp
