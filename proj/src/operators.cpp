#include "swlab/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace swlab {

namespace {

void require_unitary(const Eigen::MatrixXcd& u) {
    if (u.rows() != u.cols()) throw std::invalid_argument("ad: matrix not square");
    Eigen::MatrixXcd r = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    if (r.cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("ad: input is not unitary within 1e-10");
}

// digit-permutation matrix on base^k indices, digit g of the input read
// from digit s(g) of the output
Eigen::MatrixXcd digit_perm_matrix(long long base, int k, const Permutation& s) {
    long long dim = 1;
    for (int f = 0; f < k; ++f) dim *= base;
    check_dense_cap(dim);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<long long> digits(k), q(k);
    for (long long g = 0; g < dim; ++g) {
        long long t = g;
        for (int f = k - 1; f >= 0; --f) {
            digits[f] = t % base;
            t /= base;
        }
        for (int f = 0; f < k; ++f) q[f] = digits[s[f]];
        long long col = 0;
        for (int f = 0; f < k; ++f) col = col * base + q[f];
        p(g, col) = 1.0;
    }
    return p;
}

} // namespace

Eigen::MatrixXcd ad_matrix(const Eigen::MatrixXcd& u) {
    require_unitary(u);
    const int d = static_cast<int>(u.rows());
    check_dense_cap(static_cast<long long>(d) * d);
    Eigen::MatrixXcd a(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l)
                for (int m = 0; m < d; ++m) a(i * d + j, l * d + m) = u(i, l) * std::conj(u(j, m));
    return a;
}

Eigen::MatrixXcd ad_tensor(const FactorModel& model, const std::vector<Eigen::MatrixXcd>& us) {
    if (static_cast<int>(us.size()) != model.k)
        throw std::invalid_argument("ad_tensor: need one unitary per factor");
    check_dense_cap(model.hs_dim());
    Eigen::MatrixXcd out = ad_matrix(us[0]);
    for (int f = 1; f < model.k; ++f) {
        const Eigen::MatrixXcd next = ad_matrix(us[f]);
        Eigen::MatrixXcd big(out.rows() * next.rows(), out.cols() * next.cols());
        for (Eigen::Index i = 0; i < out.rows(); ++i)
            for (Eigen::Index j = 0; j < out.cols(); ++j)
                big.block(i * next.rows(), j * next.cols(), next.rows(), next.cols()) =
                    out(i, j) * next;
        out = std::move(big);
    }
    return out;
}

Eigen::MatrixXcd ad_tensor(const FactorModel& model, const Eigen::MatrixXcd& u) {
    return ad_tensor(model, std::vector<Eigen::MatrixXcd>(model.k, u));
}

Eigen::MatrixXcd perm_op(const FactorModel& model, const Permutation& s) {
    if (static_cast<int>(s.size()) != model.k)
        throw std::invalid_argument("perm_op: permutation size mismatch");
    return digit_perm_matrix(static_cast<long long>(model.d) * model.d, model.k, s);
}

Eigen::MatrixXcd semigroup_op(const FactorModel& model, const PartialBijection& b) {
    if (b.k() != model.k) throw std::invalid_argument("semigroup_op: size mismatch");
    const int k = model.k;
    const int d = model.d;
    const long long dim = model.hs_dim();
    check_dense_cap(dim);

    std::vector<int> unfilled; // output factors outside the image of b
    {
        std::vector<bool> hit(k, false);
        for (int f = 0; f < k; ++f)
            if (b.defined(f)) hit[b.image(f)] = true;
        for (int g = 0; g < k; ++g)
            if (!hit[g]) unfilled.push_back(g);
    }
    const int r = b.rank();
    const double weight = std::pow(1.0 / d, k - r);

    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<int> outp(k, 0);
    for (long long col = 0; col < dim; ++col) {
        auto q = model.global_unindex(col);
        // input factors where b is undefined must carry a diagonal unit
        bool admissible = true;
        for (int f = 0; f < k && admissible; ++f) {
            auto [i, j] = model.pair_unindex(q[f]);
            if (!b.defined(f) && i != j) admissible = false;
        }
        if (!admissible) continue;
        for (int f = 0; f < k; ++f)
            if (b.defined(f)) outp[b.image(f)] = q[f];
        // sum over diagonal units for every unfilled output factor
        const int u = static_cast<int>(unfilled.size());
        std::vector<int> fill(u, 0);
        while (true) {
            for (int t = 0; t < u; ++t) outp[unfilled[t]] = model.pair_index(fill[t], fill[t]);
            op(model.global_index(outp), col) += weight;
            int t = u - 1;
            while (t >= 0 && ++fill[t] == d) fill[t--] = 0;
            if (t < 0) break;
        }
    }
    return op;
}

namespace {

// coefficient dim(lambda)/k! * chi_lambda(type) for every s in S_k
std::vector<std::pair<Permutation, double>> young_coefficients(const Partition& lambda) {
    int k = 0;
    for (int p : lambda) k += p;
    std::vector<std::pair<Permutation, double>> out;
    if (k == 0) return out;
    const double scale = static_cast<double>(irrep_dimension(lambda)) / factorial(k);
    for (const auto& s : all_permutations(k)) {
        const long long chi = character_value(lambda, cycle_type(s));
        if (chi != 0) out.emplace_back(s, scale * chi);
    }
    return out;
}

// accumulate sum of coeff * digit-permutation matrices without
// materializing each one
Eigen::MatrixXcd young_digit_sum(long long base, int k,
                                 const std::vector<std::pair<Permutation, double>>& terms,
                                 int embed_k) {
    long long dim = 1;
    for (int f = 0; f < embed_k; ++f) dim *= base;
    check_dense_cap(dim);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<long long> digits(embed_k), q(embed_k);
    for (long long g = 0; g < dim; ++g) {
        long long t = g;
        for (int f = embed_k - 1; f >= 0; --f) {
            digits[f] = t % base;
            t /= base;
        }
        for (const auto& [s, coeff] : terms) {
            for (int f = 0; f < embed_k; ++f) q[f] = (f < k) ? digits[s[f]] : digits[f];
            long long col = 0;
            for (int f = 0; f < embed_k; ++f) col = col * base + q[f];
            p(g, col) += coeff;
        }
    }
    return p;
}

} // namespace

Eigen::MatrixXcd young_projection(const FactorModel& model, const Partition& lambda) {
    int k = 0;
    for (int p : lambda) k += p;
    if (k != model.k) throw std::invalid_argument("young_projection: partition size mismatch");
    return young_digit_sum(static_cast<long long>(model.d) * model.d, k,
                           young_coefficients(lambda), model.k);
}

Eigen::MatrixXcd natural_perm_op(int n, const Permutation& s) {
    return digit_perm_matrix(n, static_cast<int>(s.size()), s);
}

Eigen::MatrixXcd natural_young_projection(int n, const Partition& lambda) {
    int k = 0;
    for (int p : lambda) k += p;
    return young_digit_sum(n, k, young_coefficients(lambda), k);
}

Eigen::MatrixXcd pa_projection(const FactorModel& model, const std::vector<int>& A) {
    const long long dim = model.hs_dim();
    check_dense_cap(dim);
    std::vector<bool> in_a(model.k, false);
    for (int j : A) {
        if (j < 0 || j >= model.k) throw std::out_of_range("pa_projection: subset index");
        in_a[j] = true;
    }
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(dim, dim);
    for (int j = 0; j < model.k; ++j) {
        Eigen::MatrixXcd e = semigroup_op(model, PartialBijection::unit_complement(model.k, j));
        if (in_a[j])
            p = (Eigen::MatrixXcd::Identity(dim, dim) - e) * p;
        else
            p = e * p;
    }
    return p;
}

Eigen::MatrixXcd pa_projection_kron(const FactorModel& model, const std::vector<int>& A) {
    // one-factor trace projection in the unit basis
    const int d = model.d;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (int l = 0; l < d; ++l)
        for (int i = 0; i < d; ++i) s(model.pair_index(l, l), model.pair_index(i, i)) = 1.0 / d;
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(d * d, d * d) - s;

    std::vector<bool> in_a(model.k, false);
    for (int j : A) in_a[j] = true;
    check_dense_cap(model.hs_dim());
    Eigen::MatrixXcd out = in_a[0] ? t : s;
    for (int f = 1; f < model.k; ++f) {
        const Eigen::MatrixXcd& next = in_a[f] ? t : s;
        Eigen::MatrixXcd big(out.rows() * next.rows(), out.cols() * next.cols());
        for (Eigen::Index i = 0; i < out.rows(); ++i)
            for (Eigen::Index j = 0; j < out.cols(); ++j)
                big.block(i * next.rows(), j * next.cols(), next.rows(), next.cols()) =
                    out(i, j) * next;
        out = std::move(big);
    }
    return out;
}

Eigen::MatrixXcd pm_projection(const FactorModel& model, int m) {
    if (m < 0 || m > model.k) throw std::invalid_argument("pm_projection: bad m");
    const long long dim = model.hs_dim();
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& a : subsets_of_size(model.k, m)) p += pa_projection(model, a);
    return p;
}

Eigen::MatrixXcd pm_gamma_projection(const FactorModel& model, int m, const Partition& gamma) {
    if (m > model.k) throw std::invalid_argument("pm_gamma_projection: m exceeds k");
    int gsum = 0;
    for (int p : gamma) gsum += p;
    if (gsum != m) throw std::invalid_argument("pm_gamma_projection: partition size mismatch");
    const long long dim = model.hs_dim();
    check_dense_cap(dim);

    std::vector<int> xm(m);
    for (int i = 0; i < m; ++i) xm[i] = i;
    Eigen::MatrixXcd core = pa_projection(model, xm);
    if (m > 0)
        core = core * young_digit_sum(static_cast<long long>(model.d) * model.d, m,
                                      young_coefficients(gamma), model.k);

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& coset : subset_cosets(model.k, m)) {
        Eigen::MatrixXcd ps = perm_op(model, coset.rep);
        out += ps * core * ps.adjoint();
    }
    return out;
}

Eigen::VectorXcd crossing_ivec(const FactorModel& model) {
    if (model.k != 2) throw std::invalid_argument("crossing: k must be 2");
    return unit_vector(model);
}

Eigen::VectorXcd crossing_wvec(const FactorModel& model) {
    if (model.k != 2) throw std::invalid_argument("crossing: k must be 2");
    const int d = model.d;
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(model.hs_dim());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<int> p = {model.pair_index(i, j), model.pair_index(j, i)};
            w[model.global_index(p)] = 1.0;
        }
    return w;
}

Eigen::MatrixXcd crossing_contraction(const FactorModel& model) {
    check_dense_cap(model.hs_dim());
    Eigen::VectorXcd iv = crossing_ivec(model);
    Eigen::VectorXcd wv = crossing_wvec(model);
    return iv * wv.adjoint();
}

} // namespace swlab
