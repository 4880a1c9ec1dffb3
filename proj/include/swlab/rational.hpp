#pragma once

// Exact rational arithmetic on 64-bit integers.  Used where results must be
// reproduced exactly (trace counts, recursion values), so there is no
// overflow handling beyond what the checked helpers below provide.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swlab {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), -checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("rational arithmetic overflow");
        return r;
    }
    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("rational arithmetic overflow");
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace swlab
