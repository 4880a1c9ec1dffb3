#pragma once

// Numerical commutant machinery: given a finite generating set of operators,
// find an orthonormal basis of everything commuting with all of them, with
// a singular-value gap diagnostic.  Also the Monte Carlo moment estimator
// that predicts the commutant dimension of the tensor conjugation action.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "swlab/model.hpp"

namespace swlab {

struct CommutantResult {
    int dim = 0;                  // number of singular values under the cut
    double gap = 0.0;             // ratio first-kept/last-dropped singular value
    double sigma_max = 0.0;
    Eigen::VectorXd singular_values;      // ascending
    std::vector<Eigen::MatrixXcd> basis;  // orthonormal under the trace inner product
};

// Nullspace of X -> [X, T_i] over all generators, through the normal matrix
// sum_i S_i* S_i of the Sylvester maps.  tol is relative to the largest
// singular value.
CommutantResult commutant_basis(const std::vector<Eigen::MatrixXcd>& generators, double tol);

// worst max-entry commutator norm over the generators, relative check helper
double max_commutator(const std::vector<Eigen::MatrixXcd>& generators,
                      const Eigen::MatrixXcd& x);

// orthonormal spanning set of the algebra generated by the given operators
// (products up to the cap degree, Gram-Schmidt with rank stabilization)
std::vector<Eigen::MatrixXcd> algebra_span(const std::vector<Eigen::MatrixXcd>& generators,
                                           int max_degree, double tol);

// relative Frobenius distance of x from the span of an orthonormal family
double span_residual(const std::vector<Eigen::MatrixXcd>& basis, const Eigen::MatrixXcd& x);

// orthonormal basis (columns) of the orthogonal complement of the unit
// vector inside L2(M_d); deterministic
Eigen::MatrixXcd traceless_basis(int d);
// conjugation action compressed to that complement
Eigen::MatrixXcd traceless_ad_matrix(const Eigen::MatrixXcd& u);

// Monte Carlo moment estimate of the commutant dimension of the k-fold
// conjugation action: mean of (|tr u|^2)^{2k}, or (|tr u|^2 - 1)^{2k} on
// the traceless subspace.  Deterministic for a fixed seed regardless of
// block scheduling.
struct MomentEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long long samples = 0;
};
MomentEstimate moment_commutant_dim(int d, int k, bool traceless, long long samples,
                                    std::uint64_t seed, int jobs);

// commutant dimension of the permutation pair (adjacent transposition,
// full cycle) acting on coordinates of C^n, plus the scalar-action check
// on the traceless diagonal subspace
struct PermutationCollapse {
    int commutant_dim = 0;
    double gap = 0.0;
    double scalar_residual = 0.0; // how far the compression is from a scalar
};
PermutationCollapse permutation_collapse_check(int n, double tol);

} // namespace swlab
