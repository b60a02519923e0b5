#pragma once

#include <vector>

#include "coverpoly/ideal.hpp"
#include "coverpoly/monomial.hpp"
#include "coverpoly/wp.hpp"

/// Serial, unoptimized versions of the parallel kernels. They are kept for
/// cross-checking in tests and as the baseline in the benchmarks.
namespace coverpoly::reference {

/// Pairwise divisibility filter, O(n^2).
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Every k-fold multiset product of generators, minimalized once at the end.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned k);

/// Pair-by-pair check with first_divergence and a divisibility scan over all
/// generators for every candidate w.
WpResult wp_check(const MonomialIdeal& ideal, const VariableOrder& order);

}  // namespace coverpoly::reference
