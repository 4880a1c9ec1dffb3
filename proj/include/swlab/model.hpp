#pragma once

// Finite model of (M, tr): M is the d x d matrix algebra with normalized
// trace, presented as a tensor product of "slots" (subfactors of sizes
// slot_sizes).  Vectors live in L2(M)^{tensor k} over the orthonormal basis
// {sqrt(d) e_{i1 j1} x ...}; a matrix-unit pair (i,j) of one factor is
// flattened as i*d+j and the k factor indices combine factor-major, first
// factor most significant.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace swlab {

using cplx = std::complex<double>;

// Dense operators on the tensor space are refused above this dimension.
inline constexpr long long kDenseDimCap = 4096;

struct FactorModel {
    std::vector<int> slot_sizes; // sizes of the slots inside one factor, each >= 2
    int d = 0;                   // product of the slot sizes
    int k = 1;                   // tensor power of L2(M_d)

    long long hs_dim() const; // (d*d)^k
    int num_slots() const { return static_cast<int>(slot_sizes.size()); }

    // flattened matrix-unit pair within one factor
    int pair_index(int i, int j) const { return i * d + j; }
    std::pair<int, int> pair_unindex(int p) const { return {p / d, p % d}; }

    // global basis index from per-factor pair indices (size k)
    long long global_index(const std::vector<int>& pair_indices) const;
    std::vector<int> global_unindex(long long g) const;

    // slot digits of a d-index, slot 0 most significant
    std::vector<int> slot_digits(int i) const;
    int from_slot_digits(const std::vector<int>& digits) const;
};

FactorModel make_model(std::vector<int> slot_sizes, int k);
// single slot of size d
FactorModel make_simple_model(int d, int k);

// throws std::length_error when a dense operator of this dimension is not allowed
void check_dense_cap(long long dim);

// coefficients of a (list of) matrices as an HS vector; matrices.size() == k
Eigen::VectorXcd embed_matrices(const FactorModel& model,
                                const std::vector<Eigen::MatrixXcd>& matrices);
Eigen::VectorXcd embed_matrix(const FactorModel& model, const Eigen::MatrixXcd& m); // k = 1
// inverse of embed_matrix for a single factor picked out of a k=1 model
Eigen::MatrixXcd extract_matrix(const FactorModel& model, const Eigen::VectorXcd& v);

// the unit vector I^{tensor k}
Eigen::VectorXcd unit_vector(const FactorModel& model);

// <a,b> = tr(b* a) in the normalized trace; coefficients are orthonormal so
// this is b.dot(a)
cplx hs_inner(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

// remove the component along I (k = 1)
Eigen::VectorXcd traceless_project(const FactorModel& model, const Eigen::VectorXcd& v);

} // namespace swlab
