#pragma once

// Conditional expectations onto the diagonal masa and onto slot ranges,
// the averaging and shift-unitary constructions that approximate them,
// the masa compression of the conjugation action, the cyclic family of
// diagonal projections, and the truncated infinite tensor model.

#include <cstdint>

#include <Eigen/Dense>

#include "swlab/model.hpp"
#include "swlab/rational.hpp"

namespace swlab {

// E_J^{tensor k}: keeps a matrix-unit pair of each factor when its row and
// column indices agree on slots 1..J (1-based J; J = num_slots gives the
// full masa expectation).  Diagonal in the unit basis.
Eigen::VectorXd cond_exp_diagonal(const FactorModel& model, int J);
Eigen::MatrixXcd cond_exp_matrix(const FactorModel& model, int J);
// apply E_J directly to a d x d matrix (single factor)
Eigen::MatrixXcd apply_cond_exp(const FactorModel& model, int J, const Eigen::MatrixXcd& m);

// average of Ad over the finite abelian group generated by diagonal
// root-of-unity unitaries in slots 1..n of a single factor (k = 1); slot
// size 2 reproduces the sign unitaries e11 - e22
Eigen::MatrixXcd gamma_average(const FactorModel& model, int n);

// conditional expectation onto slots p..J of each factor (1-based,
// inclusive): normalized partial trace over the complementary slots
Eigen::MatrixXcd local_cond_exp(const FactorModel& model, int p, int J);
// F_J = local_cond_exp(1..J) composed with the full masa expectation
Eigen::MatrixXcd f_j_projection(const FactorModel& model, int J);

// shift-block unitary approximating E_J: sum over diagonal units of slots
// 1..J times a cyclic shift placed in a distinct slot beyond n
Eigen::MatrixXcd uJn_unitary(const FactorModel& model, int J, int n);
// worst pairing |<u m u* - E_J(m), eta>| over random m, eta supported on
// slots 1..J; vanishes identically because the shifts are traceless
double check_adU_equals_EJ(const FactorModel& model, int J, int n, std::uint64_t seed,
                           int num_tests);

// entrywise squared moduli of a unitary (a doubly stochastic matrix)
Eigen::MatrixXd mu_of_unitary(const Eigen::MatrixXcd& u);

// compression of ad_tensor(u, k) to the diagonal-unit subspace; equals the
// k-fold Kronecker power of mu_of_unitary(u)
Eigen::MatrixXcd masa_compress(const FactorModel& model, const Eigen::MatrixXcd& u);
// compression of ad_tensor(uJ tensor I, k) to the slot-1..J masa tensors;
// equals kron^k of mu(uJ) (uJ acts on the first J slots)
Eigen::MatrixXcd tj_compress(const FactorModel& model, int J, const Eigen::MatrixXcd& uJ);
// kron^k of a real matrix acting on per-factor masa coordinates
Eigen::MatrixXcd gl_action(const FactorModel& model, int J, const Eigen::MatrixXd& g);

// family of pairwise orthogonal diagonal projections inside M^{tensor k}
// where M has num_slots slots of size slot_size and k = slot_size; all
// entries are exactly 0 or 1 and traces follow
// tau_{i+1} = tau_i + (1 - tau_i) k!/k^k in rational arithmetic
struct CyclicityFamily {
    int slot_size = 0;                               // k: slot size and tensor power
    int num_slots = 0;                               // slots of the underlying factor
    int start = 0;                                   // first slot used, 1-based
    long long dim = 0;                               // length of the diagonals
    std::vector<std::vector<std::vector<char>>> p;   // p[m-1][perm index]
    std::vector<std::vector<char>> e;                // cumulative E_m, m = 1..m_max
    std::vector<Rational> tau;                       // tr E_m
};
CyclicityFamily cyclicity_projections(int slot_size, int num_slots, int start, int m_max);

// diagonal spectral approximation: A diagonal, U unitary with
// ||B - U A U*|| <= eps
struct SpectralApprox {
    Eigen::VectorXd diag;
    Eigen::MatrixXcd u;
    double error = 0.0; // achieved operator-norm error
    int bins = 0;
};
SpectralApprox spectral_approximation(const Eigen::MatrixXcd& b, double eps);

// truncated infinite model: the tensor power of the model plays the role
// of the first L factors, everything beyond is the unit
Eigen::MatrixXcd o_m_projection(const FactorModel& model, int m);        // trace factor m, 1-based
Eigen::MatrixXcd p_n_projection(const FactorModel& model, int n);        // O_{n+1} ... O_L
// O_m realized by compressing the transposition (m, L+1) from the (L+1)-fold space
Eigen::MatrixXcd o_m_compression_oracle(const FactorModel& model, int m);

struct FixedSubspaceReport {
    int fixed_dim = 0;        // dimension of the joint fixed subspace
    long long expected_dim = 0;
    double projector_residual = 0.0; // max-entry gap to p_n_projection
    double idempotent_residual = 0.0;
    double selfadjoint_residual = 0.0;
};
FixedSubspaceReport fixed_subspace_check(const FactorModel& model, int n, double tol);

} // namespace swlab
