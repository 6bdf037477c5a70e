#pragma once

// Independent brute-force references used by the tests; none of these share
// code with the library paths they check.

#include <optional>
#include <vector>

#include "crystaldeg/crystal.hpp"
#include "crystaldeg/tableaux.hpp"

namespace oracles {

using namespace crystaldeg;

// All compositions of m filtered down to weakly decreasing ones, sorted
// reverse-lexicographically.
std::vector<Partition> brute_partitions(int m);

// Every function cells -> [n] filtered by the semi-standard conditions.
std::vector<Tableau> brute_ssyt(const Partition& shape, int n);

// Every permutation placement of 1..m filtered by the standard conditions.
std::vector<Tableau> brute_syt(const Partition& shape);

long long hook_length_count(const Partition& shape);

// Inverse search: try turning each occurrence of `color` into color+1 and
// keep the unique valid candidate that e_op maps back to t.
std::optional<Tableau> inverse_search_f(const Tableau& t, int color, int n);

}  // namespace oracles
