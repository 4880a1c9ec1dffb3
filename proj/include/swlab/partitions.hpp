#pragma once

// Integer partitions and symmetric group characters.
//
// Characters are computed with the Murnaghan-Nakayama rule in exact integer
// arithmetic, so the resulting tables can be compared with == rather than
// with tolerances.

#include <cstdint>
#include <map>
#include <vector>

namespace swlab {

// A partition is a weakly decreasing list of positive parts.  The empty
// partition (of 0) is allowed and has a single standard tableau.
using Partition = std::vector<int>;

// All partitions of n in lexicographically decreasing order, largest part
// first ([n], [n-1,1], ..., [1^n]).
std::vector<Partition> partitions_of(int n);

long long factorial(int n);

// Dimension of the irreducible representation labelled by lambda, by the
// hook length formula.
long long irrep_dimension(const Partition& lambda);

// Size of the conjugacy class with cycle type rho in S_n: n!/z_rho where
// z_rho = prod m_i! i^{m_i}.
long long conjugacy_class_size(const Partition& rho);

// chi^lambda(rho) by Murnaghan-Nakayama, exact.
long long character_value(const Partition& lambda, const Partition& rho);

// Full character table for S_n, rows and columns both indexed by
// partitions_of(n).
struct CharacterTable {
    int n = 0;
    std::vector<Partition> labels;        // row = irrep label, col = class type
    std::vector<long long> class_sizes;   // per column
    std::vector<std::vector<long long>> chi;
};

CharacterTable character_table(int n);

// Independent dimension count: number of standard Young tableaux of shape
// lambda, by direct recursive filling.  Slow; used as a test oracle.
long long count_standard_tableaux(const Partition& lambda);

} // namespace swlab
