#pragma once

// Permutations of {0,...,k-1} in one-line notation, plus the coset
// representatives used when summing a projection over translates of an
// m-element subset.

#include <vector>

namespace swlab {

// images[i] is the image of point i
using Permutation = std::vector<int>;

Permutation identity_perm(int k);
Permutation compose(const Permutation& a, const Permutation& b); // (a*b)(i) = a(b(i))
Permutation inverse(const Permutation& a);
// adjacent transposition (i, i+1), 0-based i
Permutation adjacent_transposition(int k, int i);
Permutation transposition(int k, int i, int j);
std::vector<Permutation> all_permutations(int k);
// cycle type as a partition of k (decreasing)
std::vector<int> cycle_type(const Permutation& p);
int num_cycles(const Permutation& p);

// For each m-element subset A of {0..k-1} (in combination order), the
// permutation sending {0..m-1} onto A order-preservingly and {m..k-1} onto
// the complement order-preservingly.  These are the minimal-length coset
// representatives for S_m x S_{k-m}.
struct SubsetCoset {
    std::vector<int> subset;  // sorted
    Permutation rep;
};
std::vector<SubsetCoset> subset_cosets(int k, int m);

// all m-element subsets of {0..k-1}, each sorted, in lexicographic order
std::vector<std::vector<int>> subsets_of_size(int k, int m);

} // namespace swlab
