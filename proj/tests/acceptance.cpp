// Acceptance gate: twenty numbered criteria, one printed line each.  Every
// tolerance is pinned here, next to the check it governs.  The binary exits
// nonzero if any criterion fails, so ctest treats the gate as one test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "swlab/commutant.hpp"
#include "swlab/expectations.hpp"
#include "swlab/inverse_semigroup.hpp"
#include "swlab/model.hpp"
#include "swlab/operators.hpp"
#include "swlab/partitions.hpp"
#include "swlab/permutations.hpp"
#include "swlab/rng.hpp"
#include "swlab/unistochastic.hpp"

using namespace swlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXcd random_matrix(int d, Xoshiro256& rng) {
    Eigen::MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = rng.complex_normal();
    return m;
}

Eigen::MatrixXcd random_skew(int n, Xoshiro256& rng) {
    Eigen::MatrixXcd m = random_matrix(n, rng);
    return 0.5 * (m - m.adjoint());
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

std::vector<Eigen::MatrixXcd> haar_ad_generators(const FactorModel& model, int count,
                                                 std::uint64_t seed) {
    std::vector<Eigen::MatrixXcd> gens;
    for (int i = 0; i < count; ++i) {
        Xoshiro256 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        gens.push_back(ad_tensor(model, haar_unitary(model.d, rng)));
    }
    return gens;
}

bool fail(std::string& detail, const std::string& message) {
    if (!detail.empty()) detail += "; ";
    detail += message;
    return false;
}

// ---- criterion bodies ------------------------------------------------------

bool criterion_presentation(std::string& detail) {
    bool ok = true;
    for (int k = 2; k <= 6; ++k) {
        if (!check_popova_relations(k).all_ok())
            ok = fail(detail, "relations fail at k=" + std::to_string(k));
        std::vector<PartialBijection> gens;
        for (int i = 0; i + 1 < k; ++i)
            gens.push_back(PartialBijection::from_permutation(adjacent_transposition(k, i)));
        gens.push_back(PartialBijection::unit_complement(k, 0));
        const long long munn = munn_size(k);
        auto closure = semigroup_closure(gens, static_cast<std::size_t>(munn) + 8);
        auto everything = all_partial_bijections(k);
        std::sort(closure.begin(), closure.end());
        std::sort(everything.begin(), everything.end());
        if (static_cast<long long>(everything.size()) != munn)
            ok = fail(detail, "enumeration misses elements at k=" + std::to_string(k));
        if (closure != everything)
            ok = fail(detail, "closure (" + std::to_string(closure.size()) +
                                  " elements) differs from the semigroup at k=" +
                                  std::to_string(k));
    }
    return ok;
}

bool criterion_characters(std::string& detail) {
    bool ok = true;
    for (int k = 1; k <= 6; ++k) {
        CharacterTable table = character_table(k);
        const std::size_t classes = table.labels.size();
        long long burnside = 0;
        for (std::size_t r = 0; r < classes; ++r) {
            long long dim = irrep_dimension(table.labels[r]);
            burnside += dim * dim;
        }
        if (burnside != factorial(k))
            ok = fail(detail, "Burnside sum off at k=" + std::to_string(k));
        for (std::size_t a = 0; a < classes; ++a)
            for (std::size_t b = a; b < classes; ++b) {
                long long sum = 0;
                for (std::size_t c = 0; c < classes; ++c)
                    sum += table.class_sizes[c] * table.chi[a][c] * table.chi[b][c];
                if (sum != (a == b ? factorial(k) : 0))
                    ok = fail(detail, "orthogonality off at k=" + std::to_string(k));
            }
    }
    return ok;
}

bool criterion_projections(std::string& detail) {
    const double tol = 1e-12;
    bool ok = true;
    for (auto [d, k] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        FactorModel model = make_simple_model(d, k);
        const long long dim = model.hs_dim();
        const Eigen::MatrixXcd ident = Eigen::MatrixXcd::Identity(dim, dim);
        Eigen::MatrixXcd young_sum = Eigen::MatrixXcd::Zero(dim, dim);
        for (const auto& lambda : partitions_of(k))
            young_sum += young_projection(model, lambda);
        if (max_abs(young_sum - ident) > tol) ok = fail(detail, "young resolution");

        Eigen::MatrixXcd subset_sum = Eigen::MatrixXcd::Zero(dim, dim);
        for (int m = 0; m <= k; ++m) {
            Eigen::MatrixXcd pm = pm_projection(model, m);
            subset_sum += pm;
            Eigen::MatrixXcd gamma_sum = Eigen::MatrixXcd::Zero(dim, dim);
            for (const auto& gamma : partitions_of(m))
                gamma_sum += pm_gamma_projection(model, m, gamma);
            if (max_abs(gamma_sum - pm) > tol) ok = fail(detail, "multiplicity refinement");
        }
        if (max_abs(subset_sum - ident) > tol) ok = fail(detail, "subset resolution");

        for (const auto& s : all_permutations(k)) {
            Eigen::MatrixXcd ps = perm_op(model, s);
            for (int m = 0; m <= k; ++m)
                for (const auto& subset : subsets_of_size(k, m)) {
                    std::vector<int> moved;
                    for (int a : subset) moved.push_back(s[a]);
                    std::sort(moved.begin(), moved.end());
                    if (max_abs(ps * pa_projection(model, subset) * ps.adjoint() -
                                pa_projection(model, moved)) > tol)
                        ok = fail(detail, "covariance at d=" + std::to_string(d) +
                                              ",k=" + std::to_string(k));
                }
        }
    }
    return ok;
}

bool criterion_conditional_expectation(std::string& detail) {
    bool ok = true;
    for (int slots = 1; slots <= 3; ++slots) {
        FactorModel model = make_model(std::vector<int>(slots, 2), 1);
        for (int j = 1; j <= slots; ++j)
            if (max_abs(gamma_average(model, j) - cond_exp_matrix(model, j)) != 0.0)
                ok = fail(detail, "averaging differs at " + std::to_string(slots) +
                                      " slots, j=" + std::to_string(j));
        for (int j = 1; j < slots; ++j)
            if (max_abs(cond_exp_matrix(model, j) * cond_exp_matrix(model, j + 1) -
                        cond_exp_matrix(model, j + 1)) != 0.0)
                ok = fail(detail, "tower not monotone");
    }
    FactorModel single = make_model({2, 2}, 1);
    FactorModel tensor = make_model({2, 2}, 2);
    Eigen::MatrixXcd e = cond_exp_matrix(single, 2);
    if (max_abs(cond_exp_matrix(tensor, 2) - kron(e, e)) > 1e-12)
        ok = fail(detail, "tensor power factorization");
    return ok;
}

bool criterion_ad_unitary(std::string& detail) {
    const double tol = 1e-12;
    bool ok = true;
    FactorModel model = make_model({2, 2, 2, 2}, 2);
    const int J = 1, n = 2, d = model.d;
    Eigen::MatrixXcd u = uJn_unitary(model, J, n);
    if (max_abs(u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)) > tol)
        ok = fail(detail, "shift unitary");
    if (check_adU_equals_EJ(model, J, n, 2024, 40) > tol)
        ok = fail(detail, "single factor pairing");

    // product test pairs supported on slots 1..J; the tensor-square pairing
    // factorizes over the two factors, so neither side is densified
    Xoshiro256 rng(4242);
    int blockJ = 1;
    for (int s = 0; s < J; ++s) blockJ *= model.slot_sizes[s];
    const int rest = d / blockJ;
    auto random_1J = [&]() {
        Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(d, d);
        for (int i = 0; i < blockJ; ++i)
            for (int j = 0; j < blockJ; ++j) {
                cplx v = rng.complex_normal();
                for (int l = 0; l < rest; ++l) big(i * rest + l, j * rest + l) = v;
            }
        return big;
    };
    for (int t = 0; t < 40; ++t) {
        cplx ad_product = 1.0, exp_product = 1.0;
        for (int f = 0; f < model.k; ++f) {
            Eigen::MatrixXcd m = random_1J();
            Eigen::MatrixXcd eta = random_1J();
            ad_product *= (eta.adjoint() * (u * m * u.adjoint())).trace() / double(d);
            exp_product *= (eta.adjoint() * apply_cond_exp(model, J, m)).trace() / double(d);
        }
        if (std::abs(ad_product - exp_product) > tol) {
            ok = fail(detail, "tensor pairing");
            break;
        }
    }
    return ok;
}

bool criterion_stochastic_compression(std::string& detail) {
    const double tol = 1e-12;
    bool ok = true;
    FactorModel model = make_simple_model(2, 2);
    for (int t = 0; t < 20; ++t) {
        Xoshiro256 rng(mix_seed(66, static_cast<std::uint64_t>(t)));
        Eigen::MatrixXcd u = haar_unitary(2, rng);
        Eigen::MatrixXd g = mu_of_unitary(u);
        if (max_abs(masa_compress(model, u) - gl_action(model, model.num_slots(), g)) > tol)
            ok = fail(detail, "masa compression sample " + std::to_string(t));
    }
    FactorModel split = make_model({2, 2}, 2);
    int used = 0;
    for (int t = 0; t < 20; ++t) {
        Xoshiro256 rng(mix_seed(67, static_cast<std::uint64_t>(t)));
        Eigen::MatrixXcd uJ = haar_unitary(2, rng);
        Eigen::MatrixXd g = mu_of_unitary(uJ);
        if (std::abs(g.determinant()) < 1e-6) continue;
        ++used;
        if (max_abs(tj_compress(split, 1, uJ) - gl_action(split, 1, g)) > tol)
            ok = fail(detail, "slot compression sample " + std::to_string(t));
    }
    if (used == 0) ok = fail(detail, "no invertible stochastic images sampled");
    return ok;
}

bool criterion_cyclicity(std::string& detail) {
    CyclicityFamily family = cyclicity_projections(2, 4, 1, 3);
    const Rational ratio(2, 4);
    Rational expected(0);
    for (std::size_t m = 0; m < 3; ++m) {
        expected = expected + (Rational(1) - expected) * ratio;
        if (family.tau[m] != expected)
            return fail(detail, "tau_" + std::to_string(m + 1) + " = " + family.tau[m].str() +
                                    " != " + expected.str());
    }
    return true;
}

bool criterion_spectral(std::string& detail) {
    bool ok = true;
    for (int t = 0; t < 50; ++t) {
        Xoshiro256 rng(mix_seed(68, static_cast<std::uint64_t>(t)));
        const int d = 2 + static_cast<int>(rng.next() % 15);
        Eigen::MatrixXcd g = random_matrix(d, rng);
        Eigen::MatrixXcd b = 0.5 * (g + g.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(b);
        const double norm = eig.eigenvalues().cwiseAbs().maxCoeff();
        for (double f : {0.5, 0.1, 0.02}) {
            const double eps = f * norm;
            SpectralApprox approx = spectral_approximation(b, eps);
            Eigen::MatrixXcd rebuilt =
                approx.u * approx.diag.cast<cplx>().asDiagonal() * approx.u.adjoint();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> gap(b - rebuilt);
            if (gap.eigenvalues().cwiseAbs().maxCoeff() > eps * (1.0 + 1e-12))
                ok = fail(detail, "error above eps at sample " + std::to_string(t));
        }
    }
    return ok;
}

bool criterion_classical_schur_weyl(std::string& detail) {
    const int cases[4][3] = {{2, 2, 2}, {2, 3, 5}, {3, 2, 2}, {3, 3, 6}};
    bool ok = true;
    for (const auto& c : cases) {
        const int n = c[0], k = c[1], expected = c[2];
        std::vector<Eigen::MatrixXcd> gens;
        for (int i = 0; i < 12; ++i) {
            Xoshiro256 rng(mix_seed(69, static_cast<std::uint64_t>(16 * n + 4 * k + i)));
            Eigen::MatrixXcd u = haar_unitary(n, rng);
            Eigen::MatrixXcd power = u;
            for (int f = 1; f < k; ++f) power = kron(power, u);
            gens.push_back(power);
        }
        CommutantResult r = commutant_basis(gens, 1e-8);
        if (r.dim != expected)
            ok = fail(detail, "dim " + std::to_string(r.dim) + " != " +
                                  std::to_string(expected) + " at (" + std::to_string(n) +
                                  "," + std::to_string(k) + ")");
        if (r.gap < 1e4)
            ok = fail(detail, "gap below 1e4 at (" + std::to_string(n) + "," +
                                  std::to_string(k) + ")");
    }
    return ok;
}

bool criterion_traceless_irreducible(std::string& detail) {
    bool ok = true;
    for (int d = 2; d <= 5; ++d) {
        std::vector<Eigen::MatrixXcd> gens;
        for (int i = 0; i < 12; ++i) {
            Xoshiro256 rng(mix_seed(70, static_cast<std::uint64_t>(8 * d + i)));
            gens.push_back(traceless_ad_matrix(haar_unitary(d, rng)));
        }
        CommutantResult r = commutant_basis(gens, 1e-8);
        if (r.dim != 1)
            ok = fail(detail, "dim " + std::to_string(r.dim) + " at d=" + std::to_string(d));
    }
    return ok;
}

bool criterion_inverse_schur_weyl(std::string& detail) {
    bool ok = true;
    for (int k = 1; k <= 2; ++k) {
        FactorModel model = make_simple_model(2, k);
        auto ads = haar_ad_generators(model, 12, 71);
        CommutantResult commutant = commutant_basis(ads, 1e-8);
        std::vector<Eigen::MatrixXcd> image;
        for (const auto& b : all_partial_bijections(k))
            image.push_back(semigroup_op(model, b));
        for (const auto& x : image)
            if (span_residual(commutant.basis, x) > 1e-8) {
                ok = fail(detail, "image element outside commutant at k=" + std::to_string(k));
                break;
            }
        auto image_span = algebra_span(image, 1, 1e-10);
        detail += (detail.empty() ? "" : "; ");
        detail += "k=" + std::to_string(k) + " gap dim " +
                  std::to_string(commutant.dim - static_cast<int>(image_span.size()));
        if (k == 2) {
            Eigen::MatrixXcd witness = crossing_contraction(model);
            if (span_residual(image_span, witness) <= 0.1)
                ok = fail(detail, "witness not outside the image span");
            if (max_commutator(ads, witness) > 1e-10)
                ok = fail(detail, "witness fails to commute");
        }
    }
    return ok;
}

bool criterion_norm_growth(std::string& detail) {
    bool ok = true;
    std::vector<double> lx, ly;
    for (int d = 2; d <= 12; ++d) {
        FactorModel model = make_simple_model(d, 2);
        const double sigma = crossing_ivec(model).norm() * crossing_wvec(model).norm();
        if (std::abs(sigma - d) / d > 1e-9)
            ok = fail(detail, "sigma off at d=" + std::to_string(d));
        lx.push_back(std::log(double(d)));
        ly.push_back(std::log(sigma));
    }
    double mx = 0, my = 0, sxx = 0, sxy = 0;
    for (double x : lx) mx += x;
    for (double y : ly) my += y;
    mx /= double(lx.size());
    my /= double(ly.size());
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    const double slope = sxy / sxx;
    if (std::abs(slope - 1.0) > 0.01)
        ok = fail(detail, "log-log slope " + std::to_string(slope));
    return ok;
}

bool criterion_moment_vs_nullspace(std::string& detail) {
    bool ok = true;
    for (auto [d, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
        MomentEstimate estimate = moment_commutant_dim(d, k, false, 100000, 72, 0);
        FactorModel model = make_simple_model(d, k);
        CommutantResult exact = commutant_basis(haar_ad_generators(model, 12, 73), 1e-8);
        const double gap = std::abs(estimate.mean - double(exact.dim));
        if (gap > 3.0 * estimate.stderr_)
            ok = fail(detail, "estimate " + std::to_string(estimate.mean) + " vs " +
                                  std::to_string(exact.dim) + " at (" + std::to_string(d) +
                                  "," + std::to_string(k) + ")");
    }
    return ok;
}

bool criterion_theta_closed_form(std::string& detail) {
    bool ok = true;
    for (int n = 2; n <= 10; ++n)
        for (int j = 1; j <= 12; ++j) {
            const cplx theta = std::polar(1.0, kPi * j / 12.0);
            const double residual = (mu_doubly_stochastic(theta_unitary(n, theta)) -
                                     mu_theta_closed(n, theta))
                                        .cwiseAbs()
                                        .maxCoeff();
            if (residual > 1e-12) {
                ok = fail(detail, "residual " + std::to_string(residual) +
                                      " at n=" + std::to_string(n));
                break;
            }
        }
    return ok;
}

bool criterion_kernel_rank(std::string& detail) {
    bool ok = true;
    double min_gap = std::numeric_limits<double>::infinity();
    for (int n = 3; n <= 10; ++n)
        for (int j = 1; j <= 6; ++j) {
            DifferentialReport r = kernel_and_rank(n, std::polar(1.0, kPi * j / 7.0));
            if (r.kernel_dim != 2 * n - 1 || r.rank != (n - 1) * (n - 1))
                ok = fail(detail, "counts off at n=" + std::to_string(n) +
                                      ", j=" + std::to_string(j));
            min_gap = std::min(min_gap, r.gap);
        }
    if (min_gap < 1e4) ok = fail(detail, "gap ratio " + std::to_string(min_gap));
    return ok;
}

bool criterion_subspace_decomposition(std::string& detail) {
    bool ok = true;
    for (int n = 4; n <= 8; ++n) {
        DecompositionReport r = decomposition_check(n, std::polar(1.0, 2.0 * kPi / 7.0));
        const int expected[5] = {2 * n - 1, n - 1, 1, n * (n - 3) / 2,
                                 (n - 1) * (n - 2) / 2};
        for (int j = 0; j < 5; ++j)
            if (r.dims[j] != expected[j])
                ok = fail(detail, "dimension off at n=" + std::to_string(n));
        if (r.total_dim != n * n) ok = fail(detail, "total off at n=" + std::to_string(n));
        if (r.orthogonality > 1e-10)
            ok = fail(detail, "orthogonality " + std::to_string(r.orthogonality));
        if (r.kernel_residual > 1e-9 || r.eigen_residual > 1e-9)
            ok = fail(detail, "eigenrelation residual at n=" + std::to_string(n));
    }
    return ok;
}

bool criterion_transfer_operators(std::string& detail) {
    const double tol = 1e-10;
    bool ok = true;
    Xoshiro256 rng(74);
    for (int n = 2; n <= 8; ++n) {
        const cplx theta = std::polar(1.0, 0.7 + 0.2 * n);
        for (int t = 0; t < 5; ++t) {
            Eigen::MatrixXcd f = random_matrix(n, rng);
            Eigen::MatrixXcd g = random_matrix(n, rng);
            if (max_abs(c_theta_inverse(n, theta, c_theta(n, theta, f)) - f) > tol ||
                max_abs(d_theta_inverse(n, theta, d_theta(n, theta, g)) - g) > tol)
                ok = fail(detail, "round trip at n=" + std::to_string(n));
            const cplx weighted = mu_weighted_inner(n, theta, f, g);
            const cplx cp = (c_theta(n, theta, f) * c_theta(n, theta, g).adjoint()).trace();
            const cplx dp = (d_theta(n, theta, f) * d_theta(n, theta, g).adjoint()).trace();
            if (std::abs(cp - weighted) > tol || std::abs(dp - weighted) > tol)
                ok = fail(detail, "pairing mismatch at n=" + std::to_string(n));
        }
    }
    return ok;
}

bool criterion_differential(std::string& detail) {
    bool ok = true;
    Xoshiro256 rng(75);
    int done = 0;
    for (int n = 3; n <= 6 && done < 50; ++n) {
        Eigen::MatrixXcd u = theta_unitary(n, std::polar(1.0, kPi / 4.0 + 0.03 * n));
        for (int t = 0; t < 13 && done < 50; ++t, ++done) {
            Eigen::MatrixXcd x = random_skew(n, rng);
            Eigen::MatrixXd formula = mu_differential(u, x);
            Eigen::MatrixXd fd = mu_differential_fd(u, x);
            const double scale = std::max(1e-12, fd.cwiseAbs().maxCoeff());
            if ((formula - fd).cwiseAbs().maxCoeff() / scale > 1e-6) {
                ok = fail(detail, "relative error above 1e-6 at n=" + std::to_string(n));
            }
        }
    }
    return ok;
}

bool criterion_search(std::string& detail) {
    bool ok = true;
    Xoshiro256 rng(76);
    Eigen::MatrixXd planted = mu_of_unitary(haar_unitary(3, rng));
    UnistochasticSearch hit = unistochastic_search(planted, 100, 600, 77);
    if (hit.best_residual >= 1e-6)
        ok = fail(detail, "planted residual " + std::to_string(hit.best_residual));
    Eigen::MatrixXd witness =
        Eigen::MatrixXd::Constant(3, 3, 0.5) - 0.5 * Eigen::MatrixXd::Identity(3, 3);
    UnistochasticSearch miss = unistochastic_search(witness, 100, 600, 78);
    const double low = *std::min_element(miss.residuals.begin(), miss.residuals.end());
    if (low <= 0.05) ok = fail(detail, "witness residual " + std::to_string(low));
    return ok;
}

bool criterion_truncation(std::string& detail) {
    bool ok = true;
    FactorModel model = make_simple_model(2, 3);
    for (int n = 0; n <= 2; ++n) {
        Eigen::MatrixXcd pn = p_n_projection(model, n);
        if (max_abs(pn * pn - pn) != 0.0)
            ok = fail(detail, "projection not exactly idempotent at n=" + std::to_string(n));
        if (max_abs(pn - pn.adjoint()) != 0.0)
            ok = fail(detail, "projection not exactly self-adjoint at n=" + std::to_string(n));
        FixedSubspaceReport fixed = fixed_subspace_check(model, n, 1e-8);
        if (fixed.fixed_dim != fixed.expected_dim)
            ok = fail(detail, "fixed dim " + std::to_string(fixed.fixed_dim) + " != " +
                                  std::to_string(fixed.expected_dim));
        if (fixed.projector_residual > 1e-10)
            ok = fail(detail, "fixed projector residual at n=" + std::to_string(n));
    }
    return ok;
}

struct Criterion {
    const char* name;
    double time_cap_seconds; // 0 = uncapped
    std::function<bool(std::string&)> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"inverse semigroup presentation and counts", 30.0, criterion_presentation},
        {"character identities", 0.0, criterion_characters},
        {"projection calculus", 0.0, criterion_projections},
        {"conditional expectation", 0.0, criterion_conditional_expectation},
        {"shift-block unitary pairings", 0.0, criterion_ad_unitary},
        {"doubly stochastic compression", 0.0, criterion_stochastic_compression},
        {"cyclicity trace recursion", 0.0, criterion_cyclicity},
        {"spectral approximation", 0.0, criterion_spectral},
        {"classical Schur-Weyl dimensions", 120.0, criterion_classical_schur_weyl},
        {"traceless conjugation irreducibility", 0.0, criterion_traceless_irreducible},
        {"semigroup image inside the commutant", 0.0, criterion_inverse_schur_weyl},
        {"crossing norm growth", 0.0, criterion_norm_growth},
        {"moment estimate vs nullspace", 60.0, criterion_moment_vs_nullspace},
        {"stochastic image closed form", 0.0, criterion_theta_closed_form},
        {"differential kernel and rank", 60.0, criterion_kernel_rank},
        {"five-subspace decomposition", 0.0, criterion_subspace_decomposition},
        {"transfer operator identities", 0.0, criterion_transfer_operators},
        {"analytic vs finite-difference differential", 0.0, criterion_differential},
        {"unistochastic search", 0.0, criterion_search},
        {"truncated model projections", 0.0, criterion_truncation},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = criteria[i].body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].time_cap_seconds > 0 && seconds > criteria[i].time_cap_seconds) {
            pass = false;
            detail += (detail.empty() ? "" : "; ");
            detail += "over the " + std::to_string(criteria[i].time_cap_seconds) + "s cap";
        }
        std::printf("criterion %02zu %s: %s (%.2fs)%s%s\n", i + 1,
                    pass ? "PASS" : "FAIL", criteria[i].name, seconds,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!pass) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
