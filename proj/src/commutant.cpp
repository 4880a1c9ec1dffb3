#include "swlab/commutant.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "swlab/rng.hpp"

namespace swlab {

CommutantResult commutant_basis(const std::vector<Eigen::MatrixXcd>& generators, double tol) {
    if (generators.empty()) throw std::invalid_argument("commutant_basis: no generators");
    const Eigen::Index n = generators[0].rows();
    const Eigen::Index nn = n * n;
    if (static_cast<long long>(nn) > 20000 ||
        static_cast<long long>(generators.size()) * nn * nn > 80000000)
        throw std::length_error("commutant_basis: operator space too large");
    for (const auto& t : generators)
        if (t.rows() != n || t.cols() != n)
            throw std::invalid_argument("commutant_basis: inconsistent generator shapes");

    // stacked Sylvester maps S_T vec(X) = vec(TX - XT), one block of rows per
    // generator.  The SVD is taken of the stack directly: squaring into the
    // normal matrix would lift the kernel noise from roundoff to its square
    // root and bury an 1e-8 relative cut.
    Eigen::MatrixXcd s =
        Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(generators.size()) * nn, nn);
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        const auto& t = generators[gi];
        const Eigen::Index off = static_cast<Eigen::Index>(gi) * nn;
        // vec is column major: entry X(b,a) sits at a*n + b
        for (Eigen::Index a = 0; a < n; ++a) s.block(off + a * n, a * n, n, n) = t;
        for (Eigen::Index a = 0; a < n; ++a)
            for (Eigen::Index c = 0; c < n; ++c)
                for (Eigen::Index b = 0; b < n; ++b) s(off + a * n + b, c * n + b) -= t(c, a);
    }

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(s, Eigen::ComputeThinV);
    const Eigen::VectorXd desc = svd.singularValues(); // descending

    CommutantResult res;
    res.singular_values = desc.reverse();
    res.sigma_max = desc[0];
    const double cut = res.sigma_max * tol;
    int dim = 0;
    while (dim < res.singular_values.size() && res.singular_values[dim] < cut) ++dim;
    res.dim = dim;
    if (dim > 0 && dim < res.singular_values.size() && res.singular_values[dim - 1] > 0.0)
        res.gap = res.singular_values[dim] / res.singular_values[dim - 1];
    else if (dim > 0 && res.singular_values[dim - 1] == 0.0)
        res.gap = std::numeric_limits<double>::infinity();

    res.basis.reserve(dim);
    for (int c = 0; c < dim; ++c) {
        Eigen::MatrixXcd x(n, n);
        // right singular vectors are unit in the Euclidean norm of vec(X),
        // which is the Frobenius norm of X, so the basis is orthonormal already
        const Eigen::Index col = nn - 1 - c;
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index i = 0; i < n; ++i) x(i, j) = svd.matrixV()(j * n + i, col);
        res.basis.push_back(std::move(x));
    }
    return res;
}

double max_commutator(const std::vector<Eigen::MatrixXcd>& generators,
                      const Eigen::MatrixXcd& x) {
    double worst = 0.0;
    for (const auto& t : generators)
        worst = std::max(worst, (t * x - x * t).cwiseAbs().maxCoeff());
    return worst;
}

std::vector<Eigen::MatrixXcd> algebra_span(const std::vector<Eigen::MatrixXcd>& generators,
                                           int max_degree, double tol) {
    if (generators.empty()) return {};
    const Eigen::Index n = generators[0].rows();
    std::vector<Eigen::MatrixXcd> basis;
    auto try_add = [&](const Eigen::MatrixXcd& cand) {
        Eigen::MatrixXcd rem = cand;
        for (const auto& b : basis) rem -= b * (b.conjugate().cwiseProduct(rem)).sum();
        const double norm = rem.norm();
        if (norm > tol) {
            basis.push_back(rem / norm);
            return true;
        }
        return false;
    };

    try_add(Eigen::MatrixXcd::Identity(n, n));
    std::vector<Eigen::MatrixXcd> frontier;
    for (const auto& g : generators)
        if (try_add(g)) frontier.push_back(g);

    for (int deg = 2; deg <= max_degree && !frontier.empty(); ++deg) {
        std::vector<Eigen::MatrixXcd> next;
        for (const auto& f : frontier)
            for (const auto& g : generators) {
                Eigen::MatrixXcd prod = f * g;
                if (try_add(prod)) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return basis;
}

double span_residual(const std::vector<Eigen::MatrixXcd>& basis, const Eigen::MatrixXcd& x) {
    Eigen::MatrixXcd rem = x;
    for (const auto& b : basis) rem -= b * (b.conjugate().cwiseProduct(rem)).sum();
    const double nx = x.norm();
    return nx > 0.0 ? rem.norm() / nx : 0.0;
}

Eigen::MatrixXcd traceless_basis(int d) {
    // complete the normalized unit vector to an orthonormal basis and drop it
    const long long n = static_cast<long long>(d) * d;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) m(i * d + i, 0) = c;
    Eigen::Index col = 1;
    for (long long p = 0; p < n && col < n; ++p) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
        e[p] = 1.0;
        m.col(col) = e;
        ++col;
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    Eigen::MatrixXcd q = qr.householderQ();
    // fix the first column to the unit vector direction (QR may flip phase)
    cplx phase = q.col(0).dot(m.col(0));
    if (std::abs(phase) > 0.0) q.col(0) *= phase / std::abs(phase);
    return q.rightCols(n - 1);
}

Eigen::MatrixXcd traceless_ad_matrix(const Eigen::MatrixXcd& u) {
    const int d = static_cast<int>(u.rows());
    Eigen::MatrixXcd b = traceless_basis(d);
    Eigen::MatrixXcd a(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l)
                for (int m2 = 0; m2 < d; ++m2)
                    a(i * d + j, l * d + m2) = u(i, l) * std::conj(u(j, m2));
    return b.adjoint() * a * b;
}

namespace {

constexpr long long kMomentBlock = 4096;

struct BlockSum {
    double sum = 0.0;
    double sumsq = 0.0;
};

BlockSum moment_block(int d, int k, bool traceless, long long begin, long long end,
                      std::uint64_t seed) {
    BlockSum bs;
    double c1 = 0.0, c2 = 0.0; // Kahan compensations
    for (long long idx = begin; idx < end; ++idx) {
        Xoshiro256 rng(mix_seed(seed, static_cast<std::uint64_t>(idx)));
        Eigen::MatrixXcd u = haar_unitary(d, rng);
        double base = std::norm(u.trace());
        if (traceless) base -= 1.0;
        double f = 1.0;
        for (int t = 0; t < 2 * k; ++t) f *= base;
        double y = f - c1;
        double t1 = bs.sum + y;
        c1 = (t1 - bs.sum) - y;
        bs.sum = t1;
        double y2 = f * f - c2;
        double t2 = bs.sumsq + y2;
        c2 = (t2 - bs.sumsq) - y2;
        bs.sumsq = t2;
    }
    return bs;
}

} // namespace

MomentEstimate moment_commutant_dim(int d, int k, bool traceless, long long samples,
                                    std::uint64_t seed, int jobs) {
    if (samples <= 0) throw std::invalid_argument("moment_commutant_dim: no samples");
    if (jobs < 1) jobs = 1;
    const long long blocks = (samples + kMomentBlock - 1) / kMomentBlock;
    std::vector<BlockSum> partial(blocks);

    std::atomic<long long> cursor{0};
    auto worker = [&]() {
        while (true) {
            long long b = cursor.fetch_add(1);
            if (b >= blocks) break;
            const long long begin = b * kMomentBlock;
            const long long end = std::min(samples, begin + kMomentBlock);
            partial[b] = moment_block(d, k, traceless, begin, end, seed);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // merge in block order so the result is independent of thread count
    double sum = 0.0, sumsq = 0.0, c1 = 0.0, c2 = 0.0;
    for (const auto& bs : partial) {
        double y = bs.sum - c1;
        double t1 = sum + y;
        c1 = (t1 - sum) - y;
        sum = t1;
        double y2 = bs.sumsq - c2;
        double t2 = sumsq + y2;
        c2 = (t2 - sumsq) - y2;
        sumsq = t2;
    }

    MomentEstimate est;
    est.samples = samples;
    est.mean = sum / samples;
    const double var = std::max(0.0, sumsq / samples - est.mean * est.mean);
    est.stderr_ = std::sqrt(var / samples);
    return est;
}

PermutationCollapse permutation_collapse_check(int n, double tol) {
    if (n < 3) throw std::invalid_argument("permutation_collapse_check: need n >= 3");
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);  // adjacent transposition
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);  // full cycle
    for (int i = 0; i < n; ++i) t(i, i) = 1.0;
    t(0, 0) = t(1, 1) = 0.0;
    t(0, 1) = t(1, 0) = 1.0;
    for (int i = 0; i < n; ++i) c((i + 1) % n, i) = 1.0;

    CommutantResult res = commutant_basis({t, c}, tol);
    PermutationCollapse out;
    out.commutant_dim = res.dim;
    out.gap = res.gap;

    // every commuting operator should act as a scalar on the complement of
    // the all-ones vector; test the worst generator of the commutant basis
    Eigen::VectorXcd ones = Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(double(n)));
    double worst = 0.0;
    for (const auto& x : res.basis) {
        // compression to the complement must equal lambda (I - ones ones*)
        Eigen::MatrixXcd pperp =
            Eigen::MatrixXcd::Identity(n, n) - ones * ones.adjoint();
        Eigen::MatrixXcd comp = pperp * x * pperp;
        const cplx lambda = comp.trace() / static_cast<double>(n - 1);
        worst = std::max(worst, (comp - lambda * pperp).cwiseAbs().maxCoeff());
    }
    out.scalar_residual = worst;
    return out;
}

} // namespace swlab
