#pragma once

// The square-modulus map u |-> [|u_ij|^2] from unitaries onto doubly
// stochastic matrices: the theta family of base points, the C/D transfer
// operators with their inverses, the differential of the map with kernel and
// rank certification, the five-subspace splitting of skew-Hermitian matrices
// that proves the rank count, Birkhoff polytope interior tests and a
// multi-start search for unitary preimages.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "swlab/model.hpp"

namespace swlab {

// [|u_ij|^2] with the unitarity of u checked first; rows and columns of the
// result sum to one because rows and columns of u are unit vectors
Eigen::MatrixXd mu_doubly_stochastic(const Eigen::MatrixXcd& u);

// entries delta_kl + (theta-1)/n; theta must sit on the unit circle
Eigen::MatrixXcd theta_unitary(int n, cplx theta);

// closed form of the square-modulus image of theta_unitary:
// p + (1 - |theta-1|^2/n)(I - p) with p the flat rank-one projection
Eigen::MatrixXd mu_theta_closed(int n, cplx theta);

// C f = (f .* U) U^*, D g = U (g .* conj(U))^T at the base point
// U = theta_unitary(n, theta); unitary between the |U_kl|^2-weighted and
// trace inner products
Eigen::MatrixXcd c_theta(int n, cplx theta, const Eigen::MatrixXcd& f);
Eigen::MatrixXcd d_theta(int n, cplx theta, const Eigen::MatrixXcd& g);

// inverses (Y U) ./ U and (Y^T conj(U)) ./ conj(U); theta = +-1 degenerates
// the weighted inner product and is refused
Eigen::MatrixXcd c_theta_inverse(int n, cplx theta, const Eigen::MatrixXcd& y);
Eigen::MatrixXcd d_theta_inverse(int n, cplx theta, const Eigen::MatrixXcd& y);

// sum_kl A_kl conj(B_kl) |U_kl|^2
cplx mu_weighted_inner(int n, cplx theta, const Eigen::MatrixXcd& a,
                       const Eigen::MatrixXcd& b);

// exp(x) for skew-Hermitian x, through the eigendecomposition of -i x
Eigen::MatrixXcd skew_exponential(const Eigen::MatrixXcd& x);

// pushforward of the square-modulus map along the left-translated tangent
// direction x (skew-Hermitian): entries (f_kl + conj(f_kl)) |u_kl|^2 with
// f = (u x) ./ u.  Every entry of u must stay away from zero.
Eigen::MatrixXd mu_differential(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& x);

// central-difference fallback along t -> u exp(t x); works for any unitary
Eigen::MatrixXd mu_differential_fd(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& x,
                                   double step = 1e-5);

struct DifferentialReport {
    int n = 0;
    cplx theta;
    int kernel_dim = 0; // expected 2n-1
    int rank = 0;       // expected (n-1)^2
    double gap = 0.0;   // smallest kept singular value over largest discarded
    double sigma_max = 0.0;
    // largest principal angle between the numerical kernel and the span of
    // the diagonals together with their conjugates by the base point
    double kernel_angle = 0.0;
    bool small_n_flag = false; // openness argument needs n > 4; counts still apply
    std::vector<double> singular_values;
};

// rank-certify the differential at theta_unitary(n, theta), 3 <= n <= 12
DifferentialReport kernel_and_rank(int n, cplx theta, double tol = 1e-8);

enum class SubspaceKind { K, B, O, IS, RS };

struct SubspaceBasis {
    SubspaceKind kind;
    int n = 0;
    // orthonormal under Re tr(a b^*)
    std::vector<Eigen::MatrixXcd> basis;
    bool empty_flagged = false; // IS at n = 3 is zero-dimensional
};

// K: diagonals and their conjugates by the base point (dim 2n-1)
// B: the theta-dependent pair matrices (dim n-1)
// O: the line through i(I - J) (dim 1)
// IS: i * (real symmetric, zero diagonal, zero row sums) (dim n(n-3)/2)
// RS: real antisymmetric with zero row sums (dim (n-1)(n-2)/2)
SubspaceBasis subspace_basis(SubspaceKind kind, int n, cplx theta);

struct DecompositionReport {
    int n = 0;
    cplx theta;
    int dims[5] = {0, 0, 0, 0, 0}; // K, B, O, IS, RS
    int total_dim = 0;             // expected n^2
    double orthogonality = 0.0;    // worst cross pairing Re tr(a b^*)
    double span_sigma_min = 0.0;   // smallest singular value of the stacked basis
    double span_sigma_max = 0.0;
    double span_gap = 0.0;         // sigma_min over roundoff at sigma_max scale
    double kernel_residual = 0.0;  // worst |C^-1 eta - D^-1 eta| on K
    double eigen_residual = 0.0;   // worst eigenrelation defect on B, O, IS, RS
    bool is_flagged = false;       // IS came back empty
};

DecompositionReport decomposition_check(int n, cplx theta);

struct BirkhoffReport {
    int n = 0;
    bool boundary = false;        // an entry of P vanishes
    double kappa = 0.0;           // certified perturbation radius (0 on the boundary)
    double kappa_exact = 0.0;     // entrywise bound over the same perturbations
    double pattern_residual = 0.0; // first row/column of O P O^T against e_1
};

// P doubly stochastic; samples random block perturbations of unit max-entry
// and certifies the radius keeping P + O^T B O entrywise nonnegative
BirkhoffReport birkhoff_interior_check(const Eigen::MatrixXd& p, int samples,
                                       unsigned long long seed);

struct UnistochasticSearch {
    Eigen::MatrixXcd best_u;
    double best_residual = 0.0;
    std::vector<double> residuals; // one per start, in start order
};

// minimize |mu(u) - P|_F over the unitary group by Armijo-damped Riemannian
// gradient steps with exponential retraction; start 0 is the identity, the
// rest are Haar points seeded per start
UnistochasticSearch unistochastic_search(const Eigen::MatrixXd& p, int starts,
                                         int iters, unsigned long long seed);

} // namespace swlab
