// Conditional expectations, the shift-block approximants, the compression
// identities and the truncated model.  Oracles are entrywise closed forms
// built independently from the slot digit decomposition.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "swlab/expectations.hpp"
#include "swlab/model.hpp"
#include "swlab/operators.hpp"
#include "swlab/rng.hpp"

using namespace swlab;

namespace {

Eigen::MatrixXcd random_matrix(int d, Xoshiro256& rng) {
    Eigen::MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = rng.complex_normal();
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// entrywise oracle: E_J keeps m_ij iff the digit strings of i and j agree on
// slots 1..J
Eigen::MatrixXcd cond_exp_entrywise(const FactorModel& model, int J,
                                    const Eigen::MatrixXcd& m) {
    Eigen::MatrixXcd out = m;
    for (int i = 0; i < model.d; ++i)
        for (int j = 0; j < model.d; ++j) {
            auto di = model.slot_digits(i);
            auto dj = model.slot_digits(j);
            for (int s = 0; s < J; ++s)
                if (di[s] != dj[s]) out(i, j) = 0.0;
        }
    return out;
}

} // namespace

TEST_CASE("diagonal expectation matches the entrywise rule") {
    FactorModel model = make_model({2, 3}, 1);
    Xoshiro256 rng(23);
    CHECK_THROWS_AS(cond_exp_diagonal(model, 0), std::out_of_range);
    CHECK_THROWS_AS(cond_exp_diagonal(model, 3), std::out_of_range);
    for (int J = 1; J <= model.num_slots(); ++J) {
        Eigen::MatrixXcd e = cond_exp_matrix(model, J);
        CHECK(max_abs(e * e - e) < 1e-12);
        CHECK(max_abs(e - e.adjoint()) < 1e-12);
        Eigen::VectorXd diag = cond_exp_diagonal(model, J);
        CHECK(max_abs(e - Eigen::MatrixXcd(diag.cast<cplx>().asDiagonal())) < 1e-12);
        for (int t = 0; t < 5; ++t) {
            Eigen::MatrixXcd m = random_matrix(model.d, rng);
            Eigen::MatrixXcd direct = cond_exp_entrywise(model, J, m);
            CHECK(max_abs(apply_cond_exp(model, J, m) - direct) < 1e-12);
            CHECK(max_abs(extract_matrix(model, e * embed_matrix(model, m)) - direct) <
                  1e-12);
        }
    }
    // decreasing tower
    for (int J = 1; J < model.num_slots(); ++J)
        CHECK(max_abs(cond_exp_matrix(model, J) * cond_exp_matrix(model, J + 1) -
                      cond_exp_matrix(model, J + 1)) < 1e-12);
}

TEST_CASE("root-of-unity averaging reproduces the expectation") {
    // sign averages are dyadic, so slot size 2 agrees bit for bit
    for (const auto& sizes : {std::vector<int>{2, 2}, std::vector<int>{2, 2, 2}}) {
        FactorModel model = make_model(sizes, 1);
        for (int n = 1; n <= model.num_slots(); ++n)
            CHECK(max_abs(gamma_average(model, n) - cond_exp_matrix(model, n)) == 0.0);
    }
    // slot size 3 brings in cube roots of unity, exact up to roundoff
    FactorModel mixed = make_model({3, 2}, 1);
    for (int n = 1; n <= 2; ++n)
        CHECK(max_abs(gamma_average(mixed, n) - cond_exp_matrix(mixed, n)) < 1e-14);
}

TEST_CASE("local expectation is the normalized partial trace") {
    FactorModel model = make_model({2, 2}, 1);
    Xoshiro256 rng(29);
    Eigen::MatrixXcd x = random_matrix(4, rng);
    // keep slot 1, trace slot 2
    Eigen::MatrixXcd kept = Eigen::MatrixXcd::Zero(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) kept(i, j) += x(2 * i + l, 2 * j + l) / 2.0;
    Eigen::MatrixXcd expected = kron(kept, Eigen::MatrixXcd::Identity(2, 2));
    Eigen::VectorXcd out = local_cond_exp(model, 1, 1) * embed_matrix(model, x);
    CHECK(max_abs(extract_matrix(model, out) - expected) < 1e-12);

    Eigen::MatrixXcd f = f_j_projection(model, 1);
    CHECK(max_abs(f * f - f) < 1e-12);
    CHECK(max_abs(f - f.adjoint()) < 1e-12);
    Eigen::MatrixXcd composed =
        local_cond_exp(model, 1, 1) * cond_exp_matrix(model, model.num_slots());
    CHECK(max_abs(f - composed) < 1e-12);
    // the two expectations commute, so the composition is order independent
    CHECK(max_abs(composed - cond_exp_matrix(model, model.num_slots()) *
                                 local_cond_exp(model, 1, 1)) < 1e-12);
}

TEST_CASE("shift-block unitary reproduces the expectation on pairings") {
    // the shift occupies kappa^J slots starting at n, so four slots are the
    // minimum for J = 1, n = 2
    FactorModel model = make_model({2, 2, 2, 2}, 1);
    Eigen::MatrixXcd u = uJn_unitary(model, 1, 2);
    CHECK(max_abs(u.adjoint() * u - Eigen::MatrixXcd::Identity(model.d, model.d)) < 1e-12);
    CHECK(check_adU_equals_EJ(model, 1, 2, 31, 40) < 1e-12);
    FactorModel narrow = make_model({2, 2, 2}, 1);
    CHECK_THROWS_AS(uJn_unitary(narrow, 1, 2), std::invalid_argument);
    CHECK(check_adU_equals_EJ(narrow, 1, 1, 31, 40) < 1e-12);
    FactorModel wide = make_model({2, 2, 2, 2}, 2);
    CHECK(check_adU_equals_EJ(wide, 1, 2, 37, 40) < 1e-12);
}

TEST_CASE("masa compression equals the stochastic image factorwise") {
    FactorModel model = make_simple_model(2, 2);
    Xoshiro256 rng(41);
    for (int t = 0; t < 10; ++t) {
        Eigen::MatrixXcd u = haar_unitary(2, rng);
        Eigen::MatrixXd g = mu_of_unitary(u);
        CHECK(max_abs(Eigen::MatrixXcd(g.rowwise().sum().cast<cplx>().asDiagonal()) -
                      Eigen::MatrixXcd::Identity(2, 2)) < 1e-12);
        Eigen::MatrixXcd expected = kron(g.cast<cplx>(), g.cast<cplx>());
        CHECK(max_abs(masa_compress(model, u) - expected) < 1e-12);
        CHECK(max_abs(gl_action(model, model.num_slots(), g) - expected) < 1e-12);
    }
    FactorModel split = make_model({2, 2}, 2);
    for (int t = 0; t < 10; ++t) {
        Eigen::MatrixXcd uJ = haar_unitary(2, rng);
        Eigen::MatrixXd g = mu_of_unitary(uJ);
        CHECK(max_abs(tj_compress(split, 1, uJ) - gl_action(split, 1, g)) < 1e-12);
    }
}

TEST_CASE("cyclic projection traces follow the rational recursion") {
    CyclicityFamily family = cyclicity_projections(2, 4, 1, 3);
    REQUIRE(family.tau.size() == 3);
    Rational ratio(2, 4); // k!/k^k at k = 2
    Rational expected(0);
    for (std::size_t m = 0; m < 3; ++m) {
        expected = expected + (Rational(1) - expected) * ratio;
        CHECK(family.tau[m] == expected);
    }
    CHECK(family.tau[0] == Rational(1, 2));
    CHECK(family.tau[1] == Rational(3, 4));
    CHECK(family.tau[2] == Rational(7, 8));
    // entries are 0/1 and distinct projections at one level never overlap
    for (const auto& level : family.p)
        for (std::size_t a = 0; a < level.size(); ++a)
            for (std::size_t b = a + 1; b < level.size(); ++b)
                for (long long i = 0; i < family.dim; ++i)
                    CHECK(!(level[a][static_cast<std::size_t>(i)] &&
                            level[b][static_cast<std::size_t>(i)]));
    // cumulative projections match the traces
    for (std::size_t m = 0; m < family.e.size(); ++m) {
        long long count = 0;
        for (char bit : family.e[m]) count += bit;
        CHECK(Rational(count, family.dim) == family.tau[m]);
    }
}

TEST_CASE("spectral approximation respects the requested error") {
    Xoshiro256 rng(43);
    for (int t = 0; t < 20; ++t) {
        const int d = 2 + static_cast<int>(rng.next() % 11);
        Eigen::MatrixXcd g(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
        Eigen::MatrixXcd b = 0.5 * (g + g.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(b);
        double norm = eig.eigenvalues().cwiseAbs().maxCoeff();
        for (double f : {0.5, 0.1, 0.02}) {
            SpectralApprox approx = spectral_approximation(b, f * norm);
            CHECK(max_abs(approx.u.adjoint() * approx.u -
                          Eigen::MatrixXcd::Identity(d, d)) < 1e-12);
            Eigen::MatrixXcd rebuilt =
                approx.u * approx.diag.cast<cplx>().asDiagonal() * approx.u.adjoint();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> gap(b - rebuilt);
            double achieved = gap.eigenvalues().cwiseAbs().maxCoeff();
            CHECK(achieved <= f * norm * (1.0 + 1e-12));
            CHECK(approx.error <= f * norm * (1.0 + 1e-12));
            CHECK(approx.bins >= 1);
        }
    }
}

TEST_CASE("slot-forgetting projections match the compression oracle") {
    FactorModel model = make_simple_model(2, 3);
    for (int m = 1; m <= 3; ++m) {
        Eigen::MatrixXcd om = o_m_projection(model, m);
        CHECK(max_abs(om * om - om) < 1e-12);
        CHECK(max_abs(om - om.adjoint()) < 1e-12);
        CHECK(max_abs(om - o_m_compression_oracle(model, m)) < 1e-12);
    }
    for (int n = 0; n <= 2; ++n) {
        Eigen::MatrixXcd pn = p_n_projection(model, n);
        CHECK(max_abs(pn * pn - pn) < 1e-12);
        CHECK(max_abs(pn - pn.adjoint()) < 1e-12);
        FixedSubspaceReport fixed = fixed_subspace_check(model, n, 1e-8);
        CHECK(fixed.fixed_dim == fixed.expected_dim);
        CHECK(fixed.projector_residual < 1e-10);
        CHECK(fixed.idempotent_residual < 1e-12);
        CHECK(fixed.selfadjoint_residual < 1e-12);
    }
}
