#include "swlab/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace swlab {

Permutation identity_perm(int k) {
    Permutation p(k);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Permutation inverse(const Permutation& a) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

Permutation adjacent_transposition(int k, int i) {
    if (i < 0 || i + 1 >= k) throw std::out_of_range("adjacent_transposition: index");
    Permutation p = identity_perm(k);
    std::swap(p[i], p[i + 1]);
    return p;
}

Permutation transposition(int k, int i, int j) {
    if (i < 0 || j < 0 || i >= k || j >= k) throw std::out_of_range("transposition: index");
    Permutation p = identity_perm(k);
    std::swap(p[i], p[j]);
    return p;
}

std::vector<Permutation> all_permutations(int k) {
    std::vector<Permutation> out;
    Permutation p = identity_perm(k);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> cycle_type(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> type;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

int num_cycles(const Permutation& p) {
    return static_cast<int>(cycle_type(p).size());
}

std::vector<std::vector<int>> subsets_of_size(int k, int m) {
    if (m < 0 || m > k) throw std::invalid_argument("subsets_of_size: bad m");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < k; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<SubsetCoset> subset_cosets(int k, int m) {
    std::vector<SubsetCoset> out;
    for (auto& s : subsets_of_size(k, m)) {
        SubsetCoset c;
        c.subset = s;
        c.rep.resize(k);
        // first m points go to the subset in order, the rest to the sorted
        // complement; this is the shortest representative of its coset
        std::vector<int> comp;
        std::size_t si = 0;
        for (int v = 0; v < k; ++v) {
            if (si < s.size() && s[si] == v) { ++si; continue; }
            comp.push_back(v);
        }
        for (int i = 0; i < m; ++i) c.rep[i] = s[i];
        for (int i = m; i < k; ++i) c.rep[i] = comp[i - m];
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace swlab
