#pragma once

// The symmetric inverse semigroup on k points: partial bijections with
// composition, the star (relational inverse), and the generator relations
// that present it from the adjacent transpositions together with one
// partial identity.

#include <cstdint>
#include <optional>
#include <vector>

#include "swlab/permutations.hpp"

namespace swlab {

// a partial bijection of {0..k-1}; image[i] = -1 means undefined at i
class PartialBijection {
public:
    PartialBijection() = default;
    explicit PartialBijection(int k); // identity
    explicit PartialBijection(std::vector<int> image);
    static PartialBijection from_permutation(const Permutation& p);
    // the partial identity that forgets point i (defined elsewhere)
    static PartialBijection unit_complement(int k, int i);

    int k() const { return static_cast<int>(image_.size()); }
    int image(int i) const { return image_[i]; }
    bool defined(int i) const { return image_[i] >= 0; }
    int rank() const;

    // (a*b)(i) = a(b(i)) where both sides are defined
    PartialBijection compose(const PartialBijection& b) const;
    // relational inverse: b(j) = i iff this(i) = j
    PartialBijection star() const;
    bool is_permutation() const { return rank() == k(); }
    Permutation to_permutation() const;

    bool operator==(const PartialBijection& o) const { return image_ == o.image_; }
    bool operator<(const PartialBijection& o) const { return image_ < o.image_; }

    // dense encoding for hashing/sets: digits in base k+1
    std::uint64_t encode() const;

private:
    std::vector<int> image_;
};

// number of elements of the symmetric inverse semigroup on k points:
// sum over l of C(k,l)^2 l!
long long munn_size(int k);

// all elements, by breadth-first closure from the full symmetric group and
// the rank k-1 partial identities (complete by construction; cross-checked
// against munn_size in tests)
std::vector<PartialBijection> all_partial_bijections(int k);

// closure of a generating set under composition, capped to avoid runaway
std::vector<PartialBijection> semigroup_closure(const std::vector<PartialBijection>& gens,
                                                std::size_t cap);

// Checks of the defining relations on the generators s_1..s_{k-1} (adjacent
// transpositions) and e = unit_complement(k, 0):
//   s_i^2 = 1,  s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1},  s_i s_j = s_j s_i (|i-j|>1),
//   e^2 = e = e*,  s_i e = e s_i (i >= 2),
//   (s_1 e)^2 = (e s_1)^2 = e s_1 e.
struct PresentationCheck {
    bool coxeter_ok = false;
    bool idempotent_ok = false;
    bool commuting_ok = false;
    bool braid_unit_ok = false;
    bool all_ok() const { return coxeter_ok && idempotent_ok && commuting_ok && braid_unit_ok; }
};
PresentationCheck check_popova_relations(int k);

} // namespace swlab
