#pragma once

// Deterministic random number generation.  We pin the generator and the
// normal sampler ourselves so that seeded runs give identical streams on
// every platform; std::mt19937 would be fine but std::normal_distribution
// is implementation defined.

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace swlab {

// SplitMix64, used for seeding and for decorrelating per-sample seeds.
std::uint64_t splitmix64(std::uint64_t& state);

// Mix a sample index into a base seed so parallel sample streams stay
// independent of scheduling order.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

// xoshiro256** by Blackman and Vigna, seeded through SplitMix64.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);
    std::uint64_t next();
    // uniform in [0, 1)
    double uniform();
    // standard normal via Box-Muller (caches the second value)
    double normal();
    std::complex<double> complex_normal();

private:
    std::uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Haar distributed unitary of size n, via QR of a complex Ginibre matrix
// with the phase correction that makes the distribution exactly Haar.
Eigen::MatrixXcd haar_unitary(int n, Xoshiro256& rng);

} // namespace swlab
