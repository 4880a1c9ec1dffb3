#include "swlab/inverse_semigroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "swlab/partitions.hpp"

namespace swlab {

PartialBijection::PartialBijection(int k) : image_(k) {
    for (int i = 0; i < k; ++i) image_[i] = i;
}

PartialBijection::PartialBijection(std::vector<int> image) : image_(std::move(image)) {
    const int k = static_cast<int>(image_.size());
    std::vector<bool> hit(k, false);
    for (int v : image_) {
        if (v < -1 || v >= k) throw std::invalid_argument("partial bijection: image out of range");
        if (v >= 0) {
            if (hit[v]) throw std::invalid_argument("partial bijection: image not injective");
            hit[v] = true;
        }
    }
}

PartialBijection PartialBijection::from_permutation(const Permutation& p) {
    return PartialBijection(std::vector<int>(p.begin(), p.end()));
}

PartialBijection PartialBijection::unit_complement(int k, int i) {
    if (i < 0 || i >= k) throw std::out_of_range("unit_complement: index");
    std::vector<int> im(k);
    for (int j = 0; j < k; ++j) im[j] = (j == i) ? -1 : j;
    return PartialBijection(std::move(im));
}

int PartialBijection::rank() const {
    int r = 0;
    for (int v : image_)
        if (v >= 0) ++r;
    return r;
}

PartialBijection PartialBijection::compose(const PartialBijection& b) const {
    if (k() != b.k()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(image_.size(), -1);
    for (int i = 0; i < k(); ++i) {
        int m = b.image_[i];
        if (m >= 0) im[i] = image_[m];
    }
    return PartialBijection(std::move(im));
}

PartialBijection PartialBijection::star() const {
    std::vector<int> im(image_.size(), -1);
    for (int i = 0; i < k(); ++i)
        if (image_[i] >= 0) im[image_[i]] = i;
    return PartialBijection(std::move(im));
}

Permutation PartialBijection::to_permutation() const {
    if (!is_permutation()) throw std::domain_error("to_permutation: not everywhere defined");
    return Permutation(image_.begin(), image_.end());
}

std::uint64_t PartialBijection::encode() const {
    std::uint64_t code = 0;
    const std::uint64_t base = static_cast<std::uint64_t>(k()) + 1;
    for (int v : image_) code = code * base + static_cast<std::uint64_t>(v + 1);
    return code;
}

long long munn_size(int k) {
    auto binom = [](int n, int r) {
        long long b = 1;
        for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
        return b;
    };
    long long total = 0;
    for (int l = 0; l <= k; ++l) total += binom(k, l) * binom(k, l) * factorial(l);
    return total;
}

std::vector<PartialBijection> all_partial_bijections(int k) {
    // direct enumeration: choose the image of each point to be -1 or an
    // unused value
    std::vector<PartialBijection> out;
    std::vector<int> im(k, -1);
    std::vector<bool> used(k, false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            out.emplace_back(im);
            return;
        }
        im[i] = -1;
        self(self, i + 1);
        for (int v = 0; v < k; ++v) {
            if (used[v]) continue;
            used[v] = true;
            im[i] = v;
            self(self, i + 1);
            im[i] = -1;
            used[v] = false;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<PartialBijection> semigroup_closure(const std::vector<PartialBijection>& gens,
                                                std::size_t cap) {
    if (gens.empty()) return {};
    std::unordered_set<std::uint64_t> seen;
    std::vector<PartialBijection> elements;
    std::deque<PartialBijection> frontier;
    // seed with the identity so the closure is a monoid
    PartialBijection id(gens[0].k());
    seen.insert(id.encode());
    elements.push_back(id);
    frontier.push_back(id);
    for (const auto& g : gens) {
        if (seen.insert(g.encode()).second) {
            elements.push_back(g);
            frontier.push_back(g);
        }
    }
    while (!frontier.empty()) {
        PartialBijection x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) {
            for (const PartialBijection& y : {x.compose(g), g.compose(x)}) {
                if (seen.insert(y.encode()).second) {
                    if (elements.size() >= cap)
                        throw std::length_error("semigroup closure exceeded element cap");
                    elements.push_back(y);
                    frontier.push_back(y);
                }
            }
        }
    }
    return elements;
}

PresentationCheck check_popova_relations(int k) {
    if (k < 2) throw std::invalid_argument("check_popova_relations: need k >= 2");
    PresentationCheck r;
    std::vector<PartialBijection> s;
    for (int i = 0; i + 1 < k; ++i)
        s.push_back(PartialBijection::from_permutation(adjacent_transposition(k, i)));
    PartialBijection e = PartialBijection::unit_complement(k, 0);
    PartialBijection id(k);

    r.coxeter_ok = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i].compose(s[i]) == id)) r.coxeter_ok = false;
        if (i + 1 < s.size()) {
            auto lhs = s[i].compose(s[i + 1]).compose(s[i]);
            auto rhs = s[i + 1].compose(s[i]).compose(s[i + 1]);
            if (!(lhs == rhs)) r.coxeter_ok = false;
        }
        for (std::size_t j = i + 2; j < s.size(); ++j)
            if (!(s[i].compose(s[j]) == s[j].compose(s[i]))) r.coxeter_ok = false;
    }

    r.idempotent_ok = (e.compose(e) == e) && (e.star() == e);

    r.commuting_ok = true;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!(s[i].compose(e) == e.compose(s[i]))) r.commuting_ok = false;

    if (!s.empty()) {
        auto se = s[0].compose(e);
        auto es = e.compose(s[0]);
        auto ese = e.compose(s[0]).compose(e);
        r.braid_unit_ok = (se.compose(se) == ese) && (es.compose(es) == ese);
    }
    return r;
}

} // namespace swlab
