#include "swlab/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace swlab {

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    Partition cur;
    // depth-first with parts bounded by the previous part
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

long long irrep_dimension(const Partition& lambda) {
    int n = 0;
    for (int p : lambda) n += p;
    if (n == 0) return 1;
    // hook lengths: h(i,j) = lambda_i - j + lambda'_j - i - 1 (0-based)
    std::vector<int> conj;
    for (int j = 0; j < lambda[0]; ++j) {
        int c = 0;
        for (int p : lambda)
            if (p > j) ++c;
        conj.push_back(c);
    }
    // n! is divisible by the hook product only as a whole, so form the
    // product before dividing
    long long hookprod = 1;
    for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hookprod *= lambda[i] - j + conj[j] - i - 1;
    return factorial(n) / hookprod;
}

long long conjugacy_class_size(const Partition& rho) {
    int n = 0;
    for (int p : rho) n += p;
    long long z = 1;
    int i = 0;
    while (i < static_cast<int>(rho.size())) {
        int j = i;
        while (j < static_cast<int>(rho.size()) && rho[j] == rho[i]) ++j;
        int mult = j - i;
        for (int m = 1; m <= mult; ++m) z *= m;
        for (int m = 0; m < mult; ++m) z *= rho[i];
        i = j;
    }
    return factorial(n) / z;
}

namespace {

// Murnaghan-Nakayama on beta-numbers (first-column hook lengths).  Removing
// a border strip of length r is removing r from one beta-number, when the
// result is a fresh nonnegative value; the sign counts the occupied values
// jumped over.
long long mn_rec(std::vector<int> beta, const Partition& rho, std::size_t ri,
                 std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
    // normalize: strip trailing structure is captured by beta itself, but a
    // leading run 0,1,2,... corresponds to empty rows; canonicalize by
    // removing it when beta[0]==0 and the run is contiguous from 0
    while (!beta.empty()) {
        bool run = true;
        for (std::size_t i = 0; i < beta.size(); ++i)
            if (beta[i] != static_cast<int>(i)) { run = false; break; }
        if (run) { beta.clear(); break; }
        break;
    }
    if (ri == rho.size()) {
        // all strips removed; success iff the partition is empty, i.e. beta
        // is 0,1,...,m-1
        for (std::size_t i = 0; i < beta.size(); ++i)
            if (beta[i] != static_cast<int>(i)) return 0;
        return 1;
    }
    auto key = std::make_pair(beta, ri);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = rho[ri];
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end());
        long long sub = mn_rec(std::move(nb), rho, ri + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

} // namespace

long long character_value(const Partition& lambda, const Partition& rho) {
    int nl = 0, nr = 0;
    for (int p : lambda) nl += p;
    for (int p : rho) nr += p;
    if (nl != nr) throw std::invalid_argument("character_value: size mismatch");
    if (nl == 0) return 1;
    // beta-numbers: lambda_i + (L - 1 - i), sorted ascending
    int L = static_cast<int>(lambda.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);
    std::sort(beta.begin(), beta.end());
    // strip longest parts first so the memo table stays small
    Partition r = rho;
    std::sort(r.begin(), r.end(), std::greater<int>());
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    return mn_rec(std::move(beta), r, 0, memo);
}

CharacterTable character_table(int n) {
    CharacterTable t;
    t.n = n;
    t.labels = partitions_of(n);
    const auto& parts = t.labels;
    t.class_sizes.reserve(parts.size());
    for (const auto& rho : parts) t.class_sizes.push_back(conjugacy_class_size(rho));
    t.chi.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        t.chi[i].resize(parts.size());
        for (std::size_t j = 0; j < parts.size(); ++j)
            t.chi[i][j] = character_value(parts[i], parts[j]);
    }
    return t;
}

long long count_standard_tableaux(const Partition& lambda) {
    int n = 0;
    for (int p : lambda) n += p;
    if (n == 0) return 1;
    // fill 1..n one at a time; state = number filled in each row
    std::vector<int> filled(lambda.size(), 0);
    long long count = 0;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) { ++count; return; }
        for (std::size_t r = 0; r < lambda.size(); ++r) {
            if (filled[r] >= lambda[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            ++filled[r];
            self(self, next + 1);
            --filled[r];
        }
    };
    rec(rec, 1);
    return count;
}

} // namespace swlab
