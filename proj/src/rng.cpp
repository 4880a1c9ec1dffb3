#include "swlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace swlab {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t s = base ^ (0x632be59bd9b4e019ULL + index);
    // run the mixer twice so adjacent indices land far apart
    splitmix64(s);
    return splitmix64(s);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    // all-zero state is invalid for xoshiro; SplitMix64 seeding avoids it
    for (auto& w : s_) w = splitmix64(seed);
}

static inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

std::uint64_t Xoshiro256::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Xoshiro256::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::complex<double> Xoshiro256::complex_normal() {
    return {normal(), normal()};
}

Eigen::MatrixXcd haar_unitary(int n, Xoshiro256& rng) {
    if (n < 1) throw std::invalid_argument("haar_unitary: size must be positive");
    Eigen::MatrixXcd g(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            g(i, j) = rng.complex_normal();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix the phase ambiguity of QR: multiply column j by r_jj/|r_jj|
    for (int j = 0; j < n; ++j) {
        std::complex<double> d = r(j, j);
        double a = std::abs(d);
        q.col(j) *= (a > 0.0) ? d / a : std::complex<double>(1.0, 0.0);
    }
    return q;
}

} // namespace swlab
