#include "swlab/expectations.hpp"

#include <cmath>
#include <stdexcept>

#include "swlab/inverse_semigroup.hpp"
#include "swlab/operators.hpp"
#include "swlab/partitions.hpp"
#include "swlab/rng.hpp"

namespace swlab {

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& a, int k) {
    Eigen::MatrixXcd out = a;
    for (int f = 1; f < k; ++f) out = kron(out, a);
    return out;
}

} // namespace

Eigen::VectorXd cond_exp_diagonal(const FactorModel& model, int J) {
    if (J < 1 || J > model.num_slots()) throw std::out_of_range("cond_exp: slot depth J");
    const long long dim = model.hs_dim();
    Eigen::VectorXd diag(dim);
    for (long long g = 0; g < dim; ++g) {
        auto pairs = model.global_unindex(g);
        bool keep = true;
        for (int f = 0; f < model.k && keep; ++f) {
            auto [a, b] = model.pair_unindex(pairs[f]);
            auto da = model.slot_digits(a);
            auto db = model.slot_digits(b);
            for (int s = 0; s < J; ++s)
                if (da[s] != db[s]) { keep = false; break; }
        }
        diag[g] = keep ? 1.0 : 0.0;
    }
    return diag;
}

Eigen::MatrixXcd cond_exp_matrix(const FactorModel& model, int J) {
    check_dense_cap(model.hs_dim());
    return cond_exp_diagonal(model, J).cast<cplx>().asDiagonal();
}

Eigen::MatrixXcd apply_cond_exp(const FactorModel& model, int J, const Eigen::MatrixXcd& m) {
    if (J < 1 || J > model.num_slots()) throw std::out_of_range("cond_exp: slot depth J");
    if (m.rows() != model.d || m.cols() != model.d)
        throw std::invalid_argument("apply_cond_exp: matrix shape");
    Eigen::MatrixXcd out = m;
    for (int a = 0; a < model.d; ++a) {
        auto da = model.slot_digits(a);
        for (int b = 0; b < model.d; ++b) {
            auto db = model.slot_digits(b);
            for (int s = 0; s < J; ++s)
                if (da[s] != db[s]) { out(a, b) = 0.0; break; }
        }
    }
    return out;
}

Eigen::MatrixXcd gamma_average(const FactorModel& model, int n) {
    if (model.k != 1) throw std::invalid_argument("gamma_average: single-factor model expected");
    if (n < 1 || n > model.num_slots()) throw std::out_of_range("gamma_average: slot count");
    const int d = model.d;
    check_dense_cap(static_cast<long long>(d) * d);

    // the group is abelian: every element is a product of slot generators
    // Ad(diag(1, w, ..., w^{size-1}))^j, so run over all exponent tuples
    long long group_order = 1;
    for (int s = 0; s < n; ++s) group_order *= model.slot_sizes[s];

    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(d * d, d * d);
    std::vector<int> exponents(n, 0);
    for (long long t = 0; t < group_order; ++t) {
        // diagonal unitary for this exponent tuple; Ad acts diagonally on units
        for (int a = 0; a < d; ++a) {
            auto da = model.slot_digits(a);
            for (int b = 0; b < d; ++b) {
                auto db = model.slot_digits(b);
                cplx phase = 1.0;
                for (int s = 0; s < n; ++s) {
                    const int size = model.slot_sizes[s];
                    const int rot = ((da[s] - db[s]) * exponents[s]) % size;
                    if (size == 2) {
                        // exact sign arithmetic
                        if (rot % 2 != 0) phase = -phase;
                    } else if (rot != 0) {
                        const double ang = 2.0 * M_PI * rot / size;
                        phase *= cplx(std::cos(ang), std::sin(ang));
                    }
                }
                avg(model.pair_index(a, b), model.pair_index(a, b)) += phase;
            }
        }
        int s = n - 1;
        while (s >= 0 && ++exponents[s] == model.slot_sizes[s]) exponents[s--] = 0;
    }
    return avg / static_cast<double>(group_order);
}

Eigen::MatrixXcd local_cond_exp(const FactorModel& model, int p, int J) {
    if (p < 1 || p > J || J > model.num_slots()) throw std::out_of_range("local_cond_exp: range");
    const int d = model.d;
    check_dense_cap(model.hs_dim());

    Eigen::MatrixXcd e1 = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        auto di = model.slot_digits(i);
        for (int j = 0; j < d; ++j) {
            auto dj = model.slot_digits(j);
            // the input unit must be diagonal on the traced slots
            bool diag_ok = true;
            double weight = 1.0;
            for (int s = 0; s < model.num_slots(); ++s) {
                if (s >= p - 1 && s <= J - 1) continue;
                if (di[s] != dj[s]) { diag_ok = false; break; }
                weight /= model.slot_sizes[s];
            }
            if (!diag_ok) continue;
            // output runs over identity insertions on the traced slots
            for (int a = 0; a < d; ++a) {
                auto dA = model.slot_digits(a);
                bool match = true;
                for (int s = p - 1; s <= J - 1 && match; ++s)
                    if (dA[s] != di[s]) match = false;
                if (!match) continue;
                std::vector<int> dB = dA;
                for (int s = p - 1; s <= J - 1; ++s) dB[s] = dj[s];
                e1(model.pair_index(a, model.from_slot_digits(dB)), model.pair_index(i, j)) +=
                    weight;
            }
        }
    }
    return kron_power(e1, model.k);
}

Eigen::MatrixXcd f_j_projection(const FactorModel& model, int J) {
    return local_cond_exp(model, 1, J) * cond_exp_matrix(model, model.num_slots());
}

namespace {

// cyclic shift of size n: 1 on the superdiagonal, 1 in the lower-left corner
Eigen::MatrixXcd shift_unitary(int n) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
    for (int l = 0; l + 1 < n; ++l) u(l, l + 1) = 1.0;
    u(n - 1, 0) = 1.0;
    return u;
}

} // namespace

Eigen::MatrixXcd uJn_unitary(const FactorModel& model, int J, int n) {
    const int L = model.num_slots();
    if (J < 1 || J > L) throw std::out_of_range("uJn_unitary: depth J");
    for (int s = 1; s < L; ++s)
        if (model.slot_sizes[s] != model.slot_sizes[0])
            throw std::invalid_argument("uJn_unitary: uniform slot sizes required");
    const int kappa = model.slot_sizes[0];
    long long blocks = 1;
    for (int s = 0; s < J; ++s) blocks *= kappa;
    if (n < J) throw std::invalid_argument("uJn_unitary: need n >= J");
    if (n + blocks > L)
        throw std::invalid_argument("uJn_unitary: not enough slots for the shift embedding");

    const int d = model.d;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
    const Eigen::MatrixXcd shift = shift_unitary(kappa);
    for (long long flat = 0; flat < blocks; ++flat) {
        const int p = n + static_cast<int>(flat); // 0-based slot index of the shift
        // decode the diagonal multi-index of slots 1..J
        std::vector<int> ij(J);
        long long t = flat;
        for (int s = J - 1; s >= 0; --s) {
            ij[s] = static_cast<int>(t % kappa);
            t /= kappa;
        }
        // assemble the elementary tensor-slot term as a dense d x d matrix
        for (int a = 0; a < d; ++a) {
            auto da = model.slot_digits(a);
            bool keep = true;
            for (int s = 0; s < J && keep; ++s)
                if (da[s] != ij[s]) keep = false;
            if (!keep) continue;
            for (int bcol = 0; bcol < d; ++bcol) {
                auto db = model.slot_digits(bcol);
                cplx val = 1.0;
                for (int s = 0; s < L; ++s) {
                    cplx factor;
                    if (s == p)
                        factor = shift(da[s], db[s]);
                    else
                        factor = (da[s] == db[s]) ? 1.0 : 0.0;
                    val *= factor;
                    if (val == cplx(0.0, 0.0)) break;
                }
                if (val != cplx(0.0, 0.0)) u(a, bcol) += val;
            }
        }
    }
    return u;
}

double check_adU_equals_EJ(const FactorModel& model, int J, int n, std::uint64_t seed,
                           int num_tests) {
    const int d = model.d;
    int blockJ = 1;
    for (int s = 0; s < J; ++s) blockJ *= model.slot_sizes[s];
    const int rest = d / blockJ;

    Eigen::MatrixXcd u = uJn_unitary(model, J, n);
    Xoshiro256 rng(seed);
    auto random_1J = [&]() {
        Eigen::MatrixXcd small(blockJ, blockJ);
        for (int i = 0; i < blockJ; ++i)
            for (int j = 0; j < blockJ; ++j) small(i, j) = rng.complex_normal();
        Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(d, d);
        // m tensor I over the remaining slots
        for (int i = 0; i < blockJ; ++i)
            for (int j = 0; j < blockJ; ++j)
                for (int l = 0; l < rest; ++l) big(i * rest + l, j * rest + l) = small(i, j);
        return big;
    };

    double worst = 0.0;
    for (int t = 0; t < num_tests; ++t) {
        Eigen::MatrixXcd m = random_1J();
        Eigen::MatrixXcd eta = random_1J();
        Eigen::MatrixXcd x = u * m * u.adjoint();
        Eigen::MatrixXcd y = apply_cond_exp(model, J, m);
        const cplx pairing = (eta.adjoint() * (x - y)).trace() / static_cast<double>(d);
        worst = std::max(worst, std::abs(pairing));
    }
    return worst;
}

Eigen::MatrixXd mu_of_unitary(const Eigen::MatrixXcd& u) {
    return u.cwiseAbs2();
}

namespace {

// selection isometry of the slot-1..J diagonal masa tensors: one column per
// per-factor multi-index tuple, entries 1/sqrt(rest-dimension) spread over
// the complement diagonal
Eigen::MatrixXcd masa_isometry(const FactorModel& model, int J) {
    const int d = model.d;
    int blockJ = 1;
    for (int s = 0; s < J; ++s) blockJ *= model.slot_sizes[s];
    const int rest = d / blockJ;
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(static_cast<long long>(d) * d, blockJ);
    const double coeff = 1.0 / std::sqrt(static_cast<double>(rest));
    for (int i = 0; i < blockJ; ++i)
        for (int l = 0; l < rest; ++l) {
            const int a = i * rest + l;
            w(model.pair_index(a, a), i) = coeff;
        }
    Eigen::MatrixXcd v = w;
    for (int f = 1; f < model.k; ++f) v = kron(v, w);
    return v;
}

} // namespace

Eigen::MatrixXcd masa_compress(const FactorModel& model, const Eigen::MatrixXcd& u) {
    Eigen::MatrixXcd big = ad_tensor(model, u);
    Eigen::MatrixXcd v = masa_isometry(model, model.num_slots());
    return v.adjoint() * big * v;
}

Eigen::MatrixXcd tj_compress(const FactorModel& model, int J, const Eigen::MatrixXcd& uJ) {
    int blockJ = 1;
    for (int s = 0; s < J; ++s) blockJ *= model.slot_sizes[s];
    if (uJ.rows() != blockJ || uJ.cols() != blockJ)
        throw std::invalid_argument("tj_compress: unitary must act on slots 1..J");
    const int rest = model.d / blockJ;
    Eigen::MatrixXcd full = kron(uJ, Eigen::MatrixXcd::Identity(rest, rest));
    Eigen::MatrixXcd big = ad_tensor(model, full);
    Eigen::MatrixXcd v = masa_isometry(model, J);
    return v.adjoint() * big * v;
}

Eigen::MatrixXcd gl_action(const FactorModel& model, int J, const Eigen::MatrixXd& g) {
    int blockJ = 1;
    for (int s = 0; s < J; ++s) blockJ *= model.slot_sizes[s];
    if (g.rows() != blockJ || g.cols() != blockJ)
        throw std::invalid_argument("gl_action: shape mismatch with slot range");
    return kron_power(g.cast<cplx>(), model.k);
}

CyclicityFamily cyclicity_projections(int slot_size, int num_slots, int start, int m_max) {
    if (slot_size < 2) throw std::invalid_argument("cyclicity: slot size must be >= 2");
    if (start < 1 || start - 1 + m_max > num_slots)
        throw std::invalid_argument("cyclicity: not enough slots for the requested depth");
    const int k = slot_size;
    long long d = 1;
    for (int s = 0; s < num_slots; ++s) d *= slot_size;
    long long dim = 1;
    for (int f = 0; f < k; ++f) dim *= d;
    if (dim > (1 << 22)) throw std::length_error("cyclicity: diagonal too long");

    CyclicityFamily fam;
    fam.slot_size = slot_size;
    fam.num_slots = num_slots;
    fam.start = start;
    fam.dim = dim;

    const auto perms = all_permutations(k);

    // slot digit t of factor f for a flattened diagonal index
    auto slot_digit = [&](long long idx, int f, int t) {
        for (int g = k - 1; g > f; --g) idx /= d;
        long long m = idx % d;
        for (int s = num_slots - 1; s > t; --s) m /= slot_size;
        return static_cast<int>(m % slot_size);
    };

    std::vector<char> e_prev(dim, 0);
    for (int m = 1; m <= m_max; ++m) {
        const int t = start - 1 + m - 1; // 0-based slot carrying this level
        std::vector<std::vector<char>> level;
        std::vector<char> e_next = e_prev;
        for (const auto& s : perms) {
            const auto sinv = inverse(s);
            std::vector<char> diag(dim, 0);
            for (long long idx = 0; idx < dim; ++idx) {
                if (e_prev[idx]) continue; // multiplied by I - E_{m-1}
                bool hit = true;
                for (int f = 0; f < k && hit; ++f)
                    if (slot_digit(idx, f, t) != sinv[f]) hit = false;
                if (hit) {
                    diag[idx] = 1;
                    e_next[idx] = 1;
                }
            }
            level.push_back(std::move(diag));
        }
        fam.p.push_back(std::move(level));
        fam.e.push_back(e_next);
        long long count = 0;
        for (char c : e_next) count += c;
        fam.tau.push_back(Rational(count, dim));
        e_prev = std::move(e_next);
    }
    return fam;
}

SpectralApprox spectral_approximation(const Eigen::MatrixXcd& b, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("spectral_approximation: eps must be positive");
    if (b.rows() != b.cols()) throw std::invalid_argument("spectral_approximation: square input");
    if ((b - b.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("spectral_approximation: self-adjoint input expected");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b);
    const Eigen::VectorXd lam = es.eigenvalues();
    const double norm = lam.cwiseAbs().maxCoeff();

    SpectralApprox out;
    out.u = es.eigenvectors();
    out.diag = Eigen::VectorXd::Zero(b.rows());
    if (norm == 0.0) {
        out.bins = 1;
        out.error = 0.0;
        return out;
    }
    const int n = static_cast<int>(std::floor(norm / eps)) + 1;
    out.bins = n;
    double err = 0.0;
    for (Eigen::Index j = 0; j < lam.size(); ++j) {
        int l = static_cast<int>(std::ceil((lam[j] + norm) * n / (2.0 * norm)));
        if (l < 0) l = 0;
        if (l > n) l = n;
        const double alpha = (2.0 * l - 1.0) * norm / n - norm;
        out.diag[j] = alpha;
        err = std::max(err, std::abs(lam[j] - alpha));
    }
    out.error = err;
    return out;
}

Eigen::MatrixXcd o_m_projection(const FactorModel& model, int m) {
    if (m < 1 || m > model.k) throw std::out_of_range("o_m_projection: factor index");
    return semigroup_op(model, PartialBijection::unit_complement(model.k, m - 1));
}

Eigen::MatrixXcd p_n_projection(const FactorModel& model, int n) {
    if (n < 0 || n >= model.k) throw std::out_of_range("p_n_projection: index");
    const long long dim = model.hs_dim();
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(dim, dim);
    for (int m = n + 1; m <= model.k; ++m) p = o_m_projection(model, m) * p;
    return p;
}

Eigen::MatrixXcd o_m_compression_oracle(const FactorModel& model, int m) {
    // enlarge by one factor, swap factor m with the new one, compress back
    FactorModel big = model;
    big.k = model.k + 1;
    check_dense_cap(big.hs_dim());
    const long long dim = model.hs_dim();
    const long long big_dim = big.hs_dim();

    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(big_dim, dim);
    const double coeff = 1.0 / std::sqrt(static_cast<double>(model.d));
    for (long long g = 0; g < dim; ++g) {
        auto pairs = model.global_unindex(g);
        pairs.push_back(0);
        for (int l = 0; l < model.d; ++l) {
            pairs[model.k] = model.pair_index(l, l);
            w(big.global_index(pairs), g) = coeff;
        }
    }
    Eigen::MatrixXcd swap = perm_op(big, transposition(big.k, m - 1, model.k));
    return w.adjoint() * swap * w;
}

FixedSubspaceReport fixed_subspace_check(const FactorModel& model, int n, double tol) {
    const long long dim = model.hs_dim();
    check_dense_cap(dim);
    const int L = model.k;

    // stack (P - I) for transpositions inside {n+1..L} and (O_i - I), i > n
    std::vector<Eigen::MatrixXcd> constraints;
    for (int i = n; i < L; ++i)
        for (int j = i + 1; j < L; ++j)
            constraints.push_back(perm_op(model, transposition(L, i, j)) -
                                  Eigen::MatrixXcd::Identity(dim, dim));
    for (int i = n + 1; i <= L; ++i)
        constraints.push_back(o_m_projection(model, i) -
                              Eigen::MatrixXcd::Identity(dim, dim));

    Eigen::MatrixXcd stacked(constraints.size() * dim, dim);
    for (std::size_t c = 0; c < constraints.size(); ++c)
        stacked.block(c * dim, 0, dim, dim) = constraints[c];

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeThinV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double cut = sv.size() ? sv[0] * tol : 0.0;
    int null_dim = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] <= cut) ++null_dim;

    FixedSubspaceReport rep;
    rep.fixed_dim = null_dim;
    long long expected = 1;
    for (int f = 0; f < n; ++f) expected *= static_cast<long long>(model.d) * model.d;
    rep.expected_dim = expected;

    Eigen::MatrixXcd q = svd.matrixV().rightCols(null_dim);
    Eigen::MatrixXcd proj = q * q.adjoint();
    Eigen::MatrixXcd pn = p_n_projection(model, n);
    rep.projector_residual = (proj - pn).cwiseAbs().maxCoeff();
    rep.idempotent_residual = (pn * pn - pn).cwiseAbs().maxCoeff();
    rep.selfadjoint_residual = (pn - pn.adjoint()).cwiseAbs().maxCoeff();
    return rep;
}

} // namespace swlab
