#pragma once

#include "monocurve/arith.hpp"

#include <mpfr.h>

#include <string>

namespace monocurve {

/// A closed real interval [lo, hi] with MPFR endpoints. Every operation
/// rounds the lower endpoint down and the upper endpoint up, so the exact
/// real result always lies inside.
class Interval {
public:
    static constexpr mpfr_prec_t kPrecision = 160;

    Interval();
    explicit Interval(long exact);
    explicit Interval(const BigInt& exact);
    Interval(const Interval& other);
    Interval& operator=(const Interval& other);
    ~Interval();

    static Interval euler_e();

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

    Interval sqrt() const;
    Interval exp() const;
    Interval log() const;
    /// this^exponent for a positive base.
    Interval pow(const Interval& exponent) const;

    /// Outward-rounded endpoints as doubles.
    double lower() const;
    double upper() const;
    bool is_exact() const;

    /// -1 when x < lo, +1 when x > hi, 0 when x lies in [lo, hi].
    int locate(const BigInt& x) const;
    /// True iff every point of this interval is <= every point of other.
    bool certainly_le(const Interval& other) const;
    /// True iff every point of this interval is > every point of other.
    bool certainly_gt(const Interval& other) const;

    std::string to_string() const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace monocurve
