#include "swlab/unistochastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swlab/rng.hpp"

namespace swlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_unitary(const Eigen::MatrixXcd& u, const char* who) {
    if (u.rows() != u.cols() || u.rows() < 1)
        throw std::invalid_argument(std::string(who) + ": matrix not square");
    Eigen::MatrixXcd r = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    if (r.cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument(std::string(who) + ": input is not unitary within 1e-10");
}

void require_unit_modulus(cplx theta) {
    if (std::abs(std::abs(theta) - 1.0) > 1e-12)
        throw std::invalid_argument("theta must have modulus one");
}

void require_theta_regular(cplx theta) {
    require_unit_modulus(theta);
    if (std::abs(theta - 1.0) < 1e-12 || std::abs(theta + 1.0) < 1e-12)
        throw std::domain_error("transfer operators degenerate at theta = 1 or -1");
}

void require_skew_hermitian(const Eigen::MatrixXcd& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("tangent matrix not square");
    if ((x + x.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("tangent matrix is not skew-Hermitian within 1e-12");
}

void require_square_of(const Eigen::MatrixXcd& m, int n, const char* who) {
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument(std::string(who) + ": matrix size does not match n");
}

void require_doubly_stochastic(const Eigen::MatrixXd& p) {
    if (p.rows() != p.cols() || p.rows() < 1)
        throw std::invalid_argument("doubly stochastic input not square");
    if (p.minCoeff() < -1e-12)
        throw std::invalid_argument("doubly stochastic input has a negative entry");
    int n = static_cast<int>(p.rows());
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    if ((p * ones - ones).cwiseAbs().maxCoeff() > 1e-10 ||
        (p.transpose() * ones - ones).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("row or column sums differ from one beyond 1e-10");
}

// real inner product Re tr(a b*) that makes the skew-Hermitian matrices a
// real Hilbert space
double re_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a.cwiseProduct(b.conjugate())).sum().real();
}

// Gram-Schmidt under re_inner, dropping directions below drop_tol in norm
std::vector<Eigen::MatrixXcd> orthonormalize(std::vector<Eigen::MatrixXcd> gens,
                                             double drop_tol = 1e-10) {
    std::vector<Eigen::MatrixXcd> basis;
    for (auto& g : gens) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) g -= re_inner(g, b) * b;
        double norm = std::sqrt(re_inner(g, g));
        if (norm > drop_tol) basis.push_back(g / norm);
    }
    return basis;
}

// stack matrices as real column vectors (real over imaginary parts), the
// isometric coordinates for re_inner
Eigen::MatrixXd stack_real(const std::vector<Eigen::MatrixXcd>& mats) {
    if (mats.empty()) return Eigen::MatrixXd();
    long rows = 2 * mats[0].size();
    Eigen::MatrixXd s(rows, static_cast<long>(mats.size()));
    for (std::size_t j = 0; j < mats.size(); ++j) {
        Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(mats[j].data(), mats[j].size());
        s.col(static_cast<long>(j)) << v.real(), v.imag();
    }
    return s;
}

// largest principal angle between the column spans of two orthonormal frames,
// through the sine sigma_max((I - qa qa^T) qb): the cosine route bottoms out
// near sqrt(machine epsilon) for nearly equal spans
double max_principal_angle(const Eigen::MatrixXd& qa, const Eigen::MatrixXd& qb) {
    if (qa.cols() == 0 || qb.cols() == 0) return kPi / 2;
    Eigen::MatrixXd residual = qb - qa * (qa.transpose() * qb);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
    double s = std::clamp(svd.singularValues().maxCoeff(), 0.0, 1.0);
    return std::asin(s);
}

// the real coordinate basis of the skew-Hermitian matrices:
// i e_kk, then e_kl - e_lk and i(e_kl + e_lk) for k < l
std::vector<Eigen::MatrixXcd> skew_hermitian_basis(int n) {
    std::vector<Eigen::MatrixXcd> basis;
    basis.reserve(static_cast<std::size_t>(n) * n);
    const cplx i(0.0, 1.0);
    for (int k = 0; k < n; ++k) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
        m(k, k) = i;
        basis.push_back(m);
    }
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
            m(k, l) = 1.0;
            m(l, k) = -1.0;
            basis.push_back(m);
            m(k, l) = i;
            m(l, k) = i;
            basis.push_back(m);
        }
    return basis;
}

// the pair matrix from the subspace-B entry table; rows/columns r and c play
// the roles of the two distinguished labels
Eigen::MatrixXcd b_pair_matrix(int n, cplx theta, int r, int c) {
    const cplx ratio_row = (cplx(n) + theta - 1.0) / ((theta - 1.0) * cplx(n - 2));
    const cplx ratio_col = std::conj(ratio_row);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, n);
    b(r, c) = -1.0;
    b(c, r) = 1.0;
    for (int p = 0; p < n; ++p) {
        if (p == r || p == c) continue;
        b(p, c) = ratio_col;  // column c
        b(r, p) = ratio_row;  // row r
        b(p, r) = -ratio_col; // column r
        b(c, p) = -ratio_row; // row c
    }
    return b;
}

// nullspace of a wide real constraint matrix, columns of the result span it
Eigen::MatrixXd real_nullspace(const Eigen::MatrixXd& c) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double cut = 1e-10 * (sv.size() > 0 ? sv(0) : 0.0);
    long rank = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++rank;
    return svd.matrixV().rightCols(svd.matrixV().cols() - rank);
}

} // namespace

Eigen::MatrixXd mu_doubly_stochastic(const Eigen::MatrixXcd& u) {
    require_unitary(u, "mu");
    return u.cwiseAbs2();
}

Eigen::MatrixXcd theta_unitary(int n, cplx theta) {
    if (n < 2) throw std::out_of_range("theta_unitary needs n >= 2");
    require_unit_modulus(theta);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Constant(n, n, (theta - 1.0) / cplx(n));
    u += Eigen::MatrixXcd::Identity(n, n);
    return u;
}

Eigen::MatrixXd mu_theta_closed(int n, cplx theta) {
    if (n < 2) throw std::out_of_range("mu_theta_closed needs n >= 2");
    require_unit_modulus(theta);
    double shrink = 1.0 - std::norm(theta - 1.0) / n;
    Eigen::MatrixXd p = Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    return p + shrink * (Eigen::MatrixXd::Identity(n, n) - p);
}

Eigen::MatrixXcd c_theta(int n, cplx theta, const Eigen::MatrixXcd& f) {
    Eigen::MatrixXcd u = theta_unitary(n, theta);
    require_square_of(f, n, "c_theta");
    return f.cwiseProduct(u) * u.adjoint();
}

Eigen::MatrixXcd d_theta(int n, cplx theta, const Eigen::MatrixXcd& g) {
    Eigen::MatrixXcd u = theta_unitary(n, theta);
    require_square_of(g, n, "d_theta");
    return u * g.cwiseProduct(u.conjugate()).transpose();
}

Eigen::MatrixXcd c_theta_inverse(int n, cplx theta, const Eigen::MatrixXcd& y) {
    require_theta_regular(theta);
    Eigen::MatrixXcd u = theta_unitary(n, theta);
    require_square_of(y, n, "c_theta_inverse");
    return (y * u).cwiseQuotient(u);
}

Eigen::MatrixXcd d_theta_inverse(int n, cplx theta, const Eigen::MatrixXcd& y) {
    require_theta_regular(theta);
    Eigen::MatrixXcd u = theta_unitary(n, theta);
    require_square_of(y, n, "d_theta_inverse");
    return (y.transpose() * u.conjugate()).cwiseQuotient(u.conjugate());
}

cplx mu_weighted_inner(int n, cplx theta, const Eigen::MatrixXcd& a,
                       const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd u = theta_unitary(n, theta);
    require_square_of(a, n, "mu_weighted_inner");
    require_square_of(b, n, "mu_weighted_inner");
    return (a.cwiseProduct(b.conjugate()).cwiseProduct(u.cwiseAbs2().cast<cplx>())).sum();
}

Eigen::MatrixXcd skew_exponential(const Eigen::MatrixXcd& x) {
    require_skew_hermitian(x);
    const cplx i(0.0, 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(-i * x);
    Eigen::VectorXcd phases =
        (i * eig.eigenvalues().cast<cplx>().array()).exp().matrix();
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

Eigen::MatrixXd mu_differential(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& x) {
    require_unitary(u, "mu_differential");
    require_skew_hermitian(x);
    if (x.rows() != u.rows())
        throw std::invalid_argument("mu_differential: tangent size does not match u");
    if (u.cwiseAbs().minCoeff() <= 1e-8)
        throw std::domain_error("mu_differential: an entry of u vanishes, use the finite-difference path");
    Eigen::MatrixXcd f = (u * x).cwiseQuotient(u);
    return (f + f.conjugate()).real().cwiseProduct(u.cwiseAbs2());
}

Eigen::MatrixXd mu_differential_fd(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& x,
                                   double step) {
    require_unitary(u, "mu_differential_fd");
    require_skew_hermitian(x);
    if (x.rows() != u.rows())
        throw std::invalid_argument("mu_differential_fd: tangent size does not match u");
    if (!(step > 0)) throw std::invalid_argument("mu_differential_fd: step must be positive");
    Eigen::MatrixXcd forward = u * skew_exponential(step * x);
    Eigen::MatrixXcd backward = u * skew_exponential(-step * x);
    return (forward.cwiseAbs2() - backward.cwiseAbs2()) / (2.0 * step);
}

DifferentialReport kernel_and_rank(int n, cplx theta, double tol) {
    if (n < 3 || n > 12) throw std::out_of_range("kernel_and_rank covers 3 <= n <= 12");
    require_unit_modulus(theta);
    if (std::abs(theta - 1.0) < 1e-12 || std::abs(theta + 1.0) < 1e-12)
        throw std::domain_error("differential analysis degenerates at theta = 1 or -1");

    Eigen::MatrixXcd u = theta_unitary(n, theta);
    Eigen::MatrixXd weights = u.cwiseAbs2();
    std::vector<Eigen::MatrixXcd> coords = skew_hermitian_basis(n);

    // the differential in the conjugated coordinates eta = u X u*, where the
    // kernel is spanned by the diagonals and their conjugates by u; the
    // kernel dimension and rank agree with the X coordinates because the
    // conjugation is a real-linear bijection of the skew-Hermitian matrices
    const long dim = static_cast<long>(n) * n;
    Eigen::MatrixXd map(dim, dim);
    for (long m = 0; m < dim; ++m) {
        const Eigen::MatrixXcd& eta = coords[static_cast<std::size_t>(m)];
        Eigen::MatrixXcd diff = c_theta_inverse(n, theta, eta) - d_theta_inverse(n, theta, eta);
        Eigen::MatrixXd out = diff.real().cwiseProduct(weights);
        map.col(m) = Eigen::Map<Eigen::VectorXd>(out.data(), dim);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(map, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();

    DifferentialReport report;
    report.n = n;
    report.theta = theta;
    report.sigma_max = sv(0);
    report.singular_values.assign(sv.data(), sv.data() + sv.size());
    double cut = tol * sv(0);
    long rank = 0;
    while (rank < sv.size() && sv(rank) > cut) ++rank;
    report.rank = static_cast<int>(rank);
    report.kernel_dim = static_cast<int>(dim - rank);
    report.gap = (rank > 0 && rank < sv.size() && sv(rank) > 0)
                     ? sv(rank - 1) / sv(rank)
                     : std::numeric_limits<double>::infinity();
    report.small_n_flag = n <= 4;

    // reconstruct the kernel vectors as matrices and compare the span with
    // the diagonal family
    std::vector<Eigen::MatrixXcd> kernel_mats;
    for (long c = rank; c < dim; ++c) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
        for (long j = 0; j < dim; ++j)
            m += svd.matrixV()(j, c) * coords[static_cast<std::size_t>(j)];
        kernel_mats.push_back(m);
    }
    std::vector<Eigen::MatrixXcd> diag_family;
    const cplx i(0.0, 1.0);
    for (int j = 0; j < n; ++j) {
        Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
        e(j, j) = i;
        diag_family.push_back(e);
        diag_family.push_back(u * e * u.adjoint());
    }
    Eigen::MatrixXd qk = stack_real(orthonormalize(diag_family));
    Eigen::MatrixXd qn = stack_real(orthonormalize(kernel_mats));
    report.kernel_angle = max_principal_angle(qk, qn);
    if (qk.cols() != qn.cols()) report.kernel_angle = kPi / 2;
    return report;
}

SubspaceBasis subspace_basis(SubspaceKind kind, int n, cplx theta) {
    if (n < 3) throw std::out_of_range("subspace_basis needs n >= 3");
    require_theta_regular(theta);

    SubspaceBasis result;
    result.kind = kind;
    result.n = n;
    const cplx i(0.0, 1.0);

    std::vector<Eigen::MatrixXcd> gens;
    switch (kind) {
    case SubspaceKind::K: {
        Eigen::MatrixXcd u = theta_unitary(n, theta);
        for (int j = 0; j < n; ++j) {
            Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
            e(j, j) = i;
            gens.push_back(e);
            gens.push_back(u * e * u.adjoint());
        }
        break;
    }
    case SubspaceKind::B:
        for (int r = 0; r + 1 < n; ++r) gens.push_back(b_pair_matrix(n, theta, r, r + 1));
        break;
    case SubspaceKind::O:
        gens.push_back(i * (Eigen::MatrixXcd::Identity(n, n) -
                            Eigen::MatrixXcd::Constant(n, n, 1.0)));
        break;
    case SubspaceKind::IS:
    case SubspaceKind::RS: {
        // coordinates c_{ab} over the pairs a < b; S_ab = S_ba = c for IS,
        // A_ab = -A_ba = c for RS; rows constrain the row sums to zero
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        Eigen::MatrixXd constraints = Eigen::MatrixXd::Zero(n, static_cast<long>(pairs.size()));
        for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
            auto [a, b] = pairs[idx];
            constraints(a, static_cast<long>(idx)) = 1.0;
            constraints(b, static_cast<long>(idx)) = (kind == SubspaceKind::IS) ? 1.0 : -1.0;
        }
        Eigen::MatrixXd null_coords = real_nullspace(constraints);
        for (long c = 0; c < null_coords.cols(); ++c) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
            for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
                auto [a, b] = pairs[idx];
                double v = null_coords(static_cast<long>(idx), c);
                if (kind == SubspaceKind::IS) {
                    m(a, b) = i * v;
                    m(b, a) = i * v;
                } else {
                    m(a, b) = v;
                    m(b, a) = -v;
                }
            }
            gens.push_back(m);
        }
        break;
    }
    }
    result.basis = orthonormalize(std::move(gens));
    result.empty_flagged = result.basis.empty();
    return result;
}

DecompositionReport decomposition_check(int n, cplx theta) {
    DecompositionReport report;
    report.n = n;
    report.theta = theta;

    const SubspaceKind kinds[5] = {SubspaceKind::K, SubspaceKind::B, SubspaceKind::O,
                                   SubspaceKind::IS, SubspaceKind::RS};
    std::vector<SubspaceBasis> bases;
    for (auto kind : kinds) bases.push_back(subspace_basis(kind, n, theta));
    for (int j = 0; j < 5; ++j) {
        report.dims[j] = static_cast<int>(bases[static_cast<std::size_t>(j)].basis.size());
        report.total_dim += report.dims[j];
    }
    report.is_flagged = bases[3].empty_flagged;

    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (const auto& ma : bases[static_cast<std::size_t>(a)].basis)
                for (const auto& mb : bases[static_cast<std::size_t>(b)].basis)
                    report.orthogonality =
                        std::max(report.orthogonality, std::abs(re_inner(ma, mb)));

    std::vector<Eigen::MatrixXcd> all;
    for (const auto& basis : bases)
        for (const auto& m : basis.basis) all.push_back(m);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stack_real(all));
    report.span_sigma_max = svd.singularValues().maxCoeff();
    report.span_sigma_min = svd.singularValues().minCoeff();
    report.span_gap = report.span_sigma_min /
                      (std::numeric_limits<double>::epsilon() * report.span_sigma_max);

    // eigenvalue relations between the two inverse transfer operators; the
    // kernel relation on K has ratio one, the others carry theta factors
    const cplx ratio = -(cplx(n) + std::conj(theta) - 1.0) / (cplx(n) + theta - 1.0);
    const cplx factors[5] = {1.0, ratio, theta * ratio, -std::conj(theta), std::conj(theta)};
    for (int j = 0; j < 5; ++j) {
        for (const auto& m : bases[static_cast<std::size_t>(j)].basis) {
            Eigen::MatrixXcd ci = c_theta_inverse(n, theta, m);
            Eigen::MatrixXcd di = d_theta_inverse(n, theta, m);
            double residual = (ci - factors[j] * di).cwiseAbs().maxCoeff();
            if (j == 0)
                report.kernel_residual = std::max(report.kernel_residual, residual);
            else
                report.eigen_residual = std::max(report.eigen_residual, residual);
        }
    }
    return report;
}

BirkhoffReport birkhoff_interior_check(const Eigen::MatrixXd& p, int samples,
                                       unsigned long long seed) {
    require_doubly_stochastic(p);
    if (samples < 1) throw std::invalid_argument("birkhoff_interior_check needs samples >= 1");
    const int n = static_cast<int>(p.rows());

    BirkhoffReport report;
    report.n = n;

    // deterministic orthogonal O: first row the flat unit vector, the rest a
    // Gram-Schmidt completion from the standard basis
    Eigen::MatrixXd o = Eigen::MatrixXd::Zero(n, n);
    o.row(0).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
    int filled = 1;
    for (int j = 0; j < n && filled < n; ++j) {
        Eigen::VectorXd v = Eigen::VectorXd::Unit(n, j);
        for (int pass = 0; pass < 2; ++pass)
            for (int r = 0; r < filled; ++r) v -= o.row(r).dot(v) * o.row(r).transpose();
        double norm = v.norm();
        if (norm > 1e-10) o.row(filled++) = v.transpose() / norm;
    }

    Eigen::MatrixXd conjugated = o * p * o.transpose();
    for (int j = 0; j < n; ++j) {
        double target = (j == 0) ? 1.0 : 0.0;
        report.pattern_residual = std::max(report.pattern_residual,
                                           std::abs(conjugated(0, j) - target));
        report.pattern_residual = std::max(report.pattern_residual,
                                           std::abs(conjugated(j, 0) - target));
    }

    if (p.minCoeff() < 1e-12 || n < 2) {
        report.boundary = true;
        return report;
    }

    // random block perturbations of unit max-entry, pushed back through O
    std::vector<Eigen::MatrixXd> moves;
    for (int s = 0; s < samples; ++s) {
        Xoshiro256 rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
        double peak = 0.0;
        for (int r = 1; r < n; ++r)
            for (int c = 1; c < n; ++c) {
                b(r, c) = 2.0 * rng.uniform() - 1.0;
                peak = std::max(peak, std::abs(b(r, c)));
            }
        if (peak < 1e-12) continue;
        moves.push_back(o.transpose() * (b / peak) * o);
    }
    if (moves.empty()) throw std::domain_error("birkhoff_interior_check: no usable perturbations");

    // entrywise critical radius per move, and the bisection the report quotes
    double exact = std::numeric_limits<double>::infinity();
    for (const auto& m : moves)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (m(r, c) < -1e-15) exact = std::min(exact, p(r, c) / -m(r, c));
    report.kappa_exact = exact;

    auto admissible = [&](double kappa) {
        for (const auto& m : moves)
            if ((p + kappa * m).minCoeff() < -1e-15) return false;
        return true;
    };
    double lo = 0.0, hi = 1.0;
    int grow = 0;
    while (admissible(hi) && grow++ < 60) hi *= 2.0;
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        (admissible(mid) ? lo : hi) = mid;
    }
    report.kappa = lo;
    return report;
}

UnistochasticSearch unistochastic_search(const Eigen::MatrixXd& p, int starts,
                                         int iters, unsigned long long seed) {
    require_doubly_stochastic(p);
    if (starts < 1 || iters < 1)
        throw std::invalid_argument("unistochastic_search needs starts >= 1 and iters >= 1");
    const int n = static_cast<int>(p.rows());

    auto objective = [&](const Eigen::MatrixXcd& u) {
        return (u.cwiseAbs2() - p).squaredNorm();
    };
    auto reunitarize = [](const Eigen::MatrixXcd& u) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
        return Eigen::MatrixXcd(svd.matrixU() * svd.matrixV().adjoint());
    };

    UnistochasticSearch result;
    result.best_residual = std::numeric_limits<double>::infinity();

    for (int s = 0; s < starts; ++s) {
        Eigen::MatrixXcd u;
        if (s == 0) {
            u = Eigen::MatrixXcd::Identity(n, n);
        } else {
            Xoshiro256 rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
            u = haar_unitary(n, rng);
        }

        double value = objective(u);
        double step = 1.0;
        Eigen::MatrixXcd prev_xi;
        double prev_step = 0.0;
        for (int it = 0; it < iters && value > 1e-18; ++it) {
            // Euclidean gradient 2(mu(u) - p) .* u, pulled back to a
            // skew-Hermitian direction at the identity
            Eigen::MatrixXcd grad = 2.0 * (u.cwiseAbs2() - p).cast<cplx>().cwiseProduct(u);
            Eigen::MatrixXcd pulled = u.adjoint() * grad;
            Eigen::MatrixXcd xi = 0.5 * (pulled - pulled.adjoint());
            double slope = xi.squaredNorm();
            if (slope < 1e-26) break;

            // Barzilai-Borwein trial step from the previous accepted move,
            // safeguarded by Armijo backtracking
            if (prev_step > 0.0) {
                Eigen::MatrixXcd y = xi - prev_xi;
                double denom = std::abs((prev_xi.cwiseProduct(y.conjugate())).sum().real());
                if (denom > 1e-30) step = prev_step * prev_xi.squaredNorm() / denom;
            }
            step = std::clamp(step, 1e-12, 1e3);

            bool accepted = false;
            for (int bt = 0; bt < 40; ++bt) {
                Eigen::MatrixXcd trial = reunitarize(u * skew_exponential(-step * xi));
                double trial_value = objective(trial);
                if (trial_value <= value - 1e-4 * step * slope) {
                    u = trial;
                    value = trial_value;
                    prev_xi = xi;
                    prev_step = step;
                    step *= 2.0;
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) break;
        }

        double residual = std::sqrt(objective(u));
        result.residuals.push_back(residual);
        if (residual < result.best_residual) {
            result.best_residual = residual;
            result.best_u = u;
        }
    }
    return result;
}

} // namespace swlab
