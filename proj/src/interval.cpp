#include "monocurve/interval.hpp"

#include "monocurve/error.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace monocurve {

namespace {

void set_big(mpfr_t target, const BigInt& value, mpfr_rnd_t rnd)
{
    mpfr_set_str(target, value.str().c_str(), 10, rnd);
}

}  // namespace

Interval::Interval()
{
    mpfr_init2(lo_, kPrecision);
    mpfr_init2(hi_, kPrecision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(long exact) : Interval()
{
    mpfr_set_si(lo_, exact, MPFR_RNDD);
    mpfr_set_si(hi_, exact, MPFR_RNDU);
}

Interval::Interval(const BigInt& exact) : Interval()
{
    set_big(lo_, exact, MPFR_RNDD);
    set_big(hi_, exact, MPFR_RNDU);
}

Interval::Interval(const Interval& other)
{
    mpfr_init2(lo_, kPrecision);
    mpfr_init2(hi_, kPrecision);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& other)
{
    if (this != &other) {
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval::~Interval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::euler_e()
{
    return Interval(1).exp();
}

Interval operator+(const Interval& a, const Interval& b)
{
    Interval r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b)
{
    Interval r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b)
{
    // Endpoint products: the minimum rounded down, the maximum rounded up.
    Interval r;
    mpfr_t down, up;
    mpfr_init2(down, Interval::kPrecision);
    mpfr_init2(up, Interval::kPrecision);
    bool first = true;
    for (auto x : {&a.lo_, &a.hi_})
        for (auto y : {&b.lo_, &b.hi_}) {
            mpfr_mul(down, *x, *y, MPFR_RNDD);
            mpfr_mul(up, *x, *y, MPFR_RNDU);
            if (first || mpfr_less_p(down, r.lo_))
                mpfr_set(r.lo_, down, MPFR_RNDD);
            if (first || mpfr_greater_p(up, r.hi_))
                mpfr_set(r.hi_, up, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(down);
    mpfr_clear(up);
    return r;
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
        throw Error(ErrorCode::RangeError, "interval division by an interval containing zero");
    Interval inv;
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
}

Interval Interval::sqrt() const
{
    if (mpfr_sgn(lo_) < 0)
        throw Error(ErrorCode::RangeError, "square root of an interval reaching below zero");
    Interval r;
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const
{
    Interval r;
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const
{
    if (mpfr_sgn(lo_) <= 0)
        throw Error(ErrorCode::RangeError, "logarithm of an interval reaching zero");
    Interval r;
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::pow(const Interval& exponent) const
{
    return (exponent * log()).exp();
}

double Interval::lower() const
{
    return mpfr_get_d(lo_, MPFR_RNDD);
}

double Interval::upper() const
{
    return mpfr_get_d(hi_, MPFR_RNDU);
}

bool Interval::is_exact() const
{
    return mpfr_equal_p(lo_, hi_) != 0;
}

int Interval::locate(const BigInt& x) const
{
    // Integers below 2^kPrecision convert exactly.
    mpfr_t v;
    mpfr_init2(v, std::max<mpfr_prec_t>(kPrecision, static_cast<mpfr_prec_t>(msb(abs(x) + 1) + 2)));
    set_big(v, x, MPFR_RNDN);
    int where = 0;
    if (mpfr_less_p(v, lo_))
        where = -1;
    else if (mpfr_greater_p(v, hi_))
        where = 1;
    mpfr_clear(v);
    return where;
}

bool Interval::certainly_le(const Interval& other) const
{
    return mpfr_lessequal_p(hi_, other.lo_) != 0;
}

bool Interval::certainly_gt(const Interval& other) const
{
    return mpfr_greater_p(lo_, other.hi_) != 0;
}

std::string Interval::to_string() const
{
    std::ostringstream out;
    out.precision(17);
    out << '[' << lower() << ", " << upper() << ']';
    return out.str();
}

}  // namespace monocurve
