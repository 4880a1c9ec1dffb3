#include "swlab/model.hpp"

#include <cmath>
#include <stdexcept>

namespace swlab {

long long FactorModel::hs_dim() const {
    long long dim = 1;
    for (int f = 0; f < k; ++f) dim *= static_cast<long long>(d) * d;
    return dim;
}

long long FactorModel::global_index(const std::vector<int>& pair_indices) const {
    if (static_cast<int>(pair_indices.size()) != k)
        throw std::invalid_argument("global_index: need one pair index per factor");
    long long g = 0;
    const long long base = static_cast<long long>(d) * d;
    for (int f = 0; f < k; ++f) g = g * base + pair_indices[f];
    return g;
}

std::vector<int> FactorModel::global_unindex(long long g) const {
    std::vector<int> p(k);
    const long long base = static_cast<long long>(d) * d;
    for (int f = k - 1; f >= 0; --f) {
        p[f] = static_cast<int>(g % base);
        g /= base;
    }
    return p;
}

std::vector<int> FactorModel::slot_digits(int i) const {
    std::vector<int> digits(slot_sizes.size());
    for (int s = num_slots() - 1; s >= 0; --s) {
        digits[s] = i % slot_sizes[s];
        i /= slot_sizes[s];
    }
    return digits;
}

int FactorModel::from_slot_digits(const std::vector<int>& digits) const {
    int i = 0;
    for (int s = 0; s < num_slots(); ++s) i = i * slot_sizes[s] + digits[s];
    return i;
}

FactorModel make_model(std::vector<int> slot_sizes, int k) {
    if (slot_sizes.empty()) throw std::invalid_argument("model needs at least one slot");
    if (k < 1) throw std::invalid_argument("tensor power must be positive");
    FactorModel m;
    long long d = 1;
    for (int s : slot_sizes) {
        if (s < 2) throw std::invalid_argument("slot sizes must be at least 2");
        d *= s;
        if (d > (1 << 20)) throw std::length_error("factor dimension too large");
    }
    m.slot_sizes = std::move(slot_sizes);
    m.d = static_cast<int>(d);
    m.k = k;
    return m;
}

FactorModel make_simple_model(int d, int k) {
    return make_model({d}, k);
}

void check_dense_cap(long long dim) {
    if (dim > kDenseDimCap)
        throw std::length_error("dense operator storage capped at tensor-space dimension 4096");
}

Eigen::VectorXcd embed_matrices(const FactorModel& model,
                                const std::vector<Eigen::MatrixXcd>& matrices) {
    if (static_cast<int>(matrices.size()) != model.k)
        throw std::invalid_argument("embed_matrices: need one matrix per factor");
    for (const auto& m : matrices)
        if (m.rows() != model.d || m.cols() != model.d)
            throw std::invalid_argument("embed_matrices: matrix shape mismatch");
    const double rd = std::sqrt(static_cast<double>(model.d));
    const long long dim = model.hs_dim();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    std::vector<int> pidx(model.k, 0);
    for (long long g = 0; g < dim; ++g) {
        auto p = model.global_unindex(g);
        cplx c = 1.0;
        for (int f = 0; f < model.k; ++f) {
            auto [i, j] = model.pair_unindex(p[f]);
            c *= matrices[f](i, j) / rd;
        }
        v[g] = c;
    }
    return v;
}

Eigen::VectorXcd embed_matrix(const FactorModel& model, const Eigen::MatrixXcd& m) {
    if (model.k != 1) throw std::invalid_argument("embed_matrix: model must have k = 1");
    return embed_matrices(model, {m});
}

Eigen::MatrixXcd extract_matrix(const FactorModel& model, const Eigen::VectorXcd& v) {
    if (model.k != 1) throw std::invalid_argument("extract_matrix: model must have k = 1");
    if (v.size() != model.hs_dim()) throw std::invalid_argument("extract_matrix: size mismatch");
    const double rd = std::sqrt(static_cast<double>(model.d));
    Eigen::MatrixXcd m(model.d, model.d);
    for (int i = 0; i < model.d; ++i)
        for (int j = 0; j < model.d; ++j) m(i, j) = v[model.pair_index(i, j)] * rd;
    return m;
}

Eigen::VectorXcd unit_vector(const FactorModel& model) {
    std::vector<Eigen::MatrixXcd> ids(model.k, Eigen::MatrixXcd::Identity(model.d, model.d));
    return embed_matrices(model, ids);
}

cplx hs_inner(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hs_inner: size mismatch");
    return b.dot(a);
}

Eigen::VectorXcd traceless_project(const FactorModel& model, const Eigen::VectorXcd& v) {
    Eigen::VectorXcd one = unit_vector(model);
    return v - one * hs_inner(v, one);
}

} // namespace swlab
