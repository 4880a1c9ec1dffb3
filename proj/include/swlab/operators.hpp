#pragma once

// Operators on the tensor powers of L2(M): the conjugation action, the
// permutation and inverse-semigroup representations, Young projections and
// the subset/multiplicity projection families built from them.

#include <Eigen/Dense>

#include "swlab/inverse_semigroup.hpp"
#include "swlab/model.hpp"
#include "swlab/partitions.hpp"
#include "swlab/permutations.hpp"

namespace swlab {

// conjugation x -> u x u* on one factor, in the orthonormal unit basis;
// equals kron(u, conj(u))
Eigen::MatrixXcd ad_matrix(const Eigen::MatrixXcd& u);

// k-fold tensor power of ad_matrix, one unitary per factor
Eigen::MatrixXcd ad_tensor(const FactorModel& model, const std::vector<Eigen::MatrixXcd>& us);
Eigen::MatrixXcd ad_tensor(const FactorModel& model, const Eigen::MatrixXcd& u);

// factor permutation operator on the tensor space
Eigen::MatrixXcd perm_op(const FactorModel& model, const Permutation& s);

// representation of the symmetric inverse semigroup: permutations act by
// perm_op, an undefined point takes the normalized trace of its factor and
// unfilled output factors receive the unit
Eigen::MatrixXcd semigroup_op(const FactorModel& model, const PartialBijection& b);

// central Young projection P^lambda = (dim/k!) sum chi(s) perm_op(s)
Eigen::MatrixXcd young_projection(const FactorModel& model, const Partition& lambda);

// the same group-algebra element in the natural permutation action on
// (C^n)^{tensor k}; used for cross-checks against classical Schur-Weyl data
Eigen::MatrixXcd natural_perm_op(int n, const Permutation& s);
Eigen::MatrixXcd natural_young_projection(int n, const Partition& lambda);

// projection onto vectors traceless exactly in the factors listed in A
// (0-based), built as the product over j of P(eps_j) or I - P(eps_j)
Eigen::MatrixXcd pa_projection(const FactorModel& model, const std::vector<int>& A);
// independent construction as a tensor product of one-factor projections
Eigen::MatrixXcd pa_projection_kron(const FactorModel& model, const std::vector<int>& A);
// sum over all m-element subsets
Eigen::MatrixXcd pm_projection(const FactorModel& model, int m);
// refinement by a partition gamma of m, summed over coset translates
Eigen::MatrixXcd pm_gamma_projection(const FactorModel& model, int m, const Partition& gamma);

// rank-one-like contraction on k = 2: x tensor y -> tr(xy) I tensor I
Eigen::MatrixXcd crossing_contraction(const FactorModel& model);
// its two defining vectors: T = ivec * wvec^dagger
Eigen::VectorXcd crossing_ivec(const FactorModel& model);
Eigen::VectorXcd crossing_wvec(const FactorModel& model);

} // namespace swlab
