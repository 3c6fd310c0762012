#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <stdexcept>
#include <string>

namespace pelljac {

/// Certified sign of a ball: Positive means the whole ball is > 0,
/// Negative means the whole ball is < 0, Uncertain means the ball
/// straddles (or touches) zero.
enum class Sign { Positive, Negative, Uncertain };

class domain_error : public std::domain_error {
    using std::domain_error::domain_error;
};

class precision_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision real with an explicit error radius (midpoint-radius
/// ball). Every operation returns a ball that encloses the exact
/// mathematical result whenever the input balls enclose theirs.
///
/// The midpoint is an MPFR float at `bits` precision; the radius is a
/// small always-rounded-up MPFR float. Binary arithmetic and reciprocals
/// go through exact dyadic endpoint intervals (GMP rationals), so the
/// enclosure argument never relies on ulp bookkeeping; ln/exp/sqrt use
/// monotone endpoint evaluation with directed rounding.
///
/// Values are immutable after construction; all operations are pure.
class Real {
  public:
    static constexpr unsigned kMinBits = 32;
    static constexpr unsigned kRadiusBits = 64;

    Real();  // exact zero at kMinBits
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    /// Ball containing the integer (exact when it fits in `bits`).
    static Real integer(long v, unsigned bits);
    static Real integer(const mpz_class& v, unsigned bits);
    /// Ball containing p/q; exact iff p/q is dyadic and fits.
    static Real rational(const mpq_class& v, unsigned bits);
    /// Exact 2^e.
    static Real pow2(long e, unsigned bits);
    /// Tightest ball (at `bits`) containing the rational interval [lo, hi].
    static Real interval(const mpq_class& lo, const mpq_class& hi, unsigned bits);

    unsigned bits() const { return bits_; }
    bool is_exact() const;  // radius == 0

    // Exact rational views of the dyadic midpoint/radius/endpoints.
    mpq_class midpoint() const;
    mpq_class radius() const;
    mpq_class lower() const;
    mpq_class upper() const;

    bool contains(const mpq_class& v) const;
    bool contains_zero() const;
    /// Whole ball strictly above / below the rational c.
    bool certainly_greater(const mpq_class& c) const;
    bool certainly_less(const mpq_class& c) const;

    Sign sign() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    /// Division; throws domain_error if the divisor ball does not exclude 0.
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;

    Real abs() const;
    /// 1/x; throws domain_error if the ball does not exclude 0.
    Real recip() const;
    /// Exact scaling by a big integer.
    Real mul_int(const mpz_class& z) const;
    Real add_int(long v) const;

    /// Natural log; requires a strictly positive ball (throws domain_error).
    Real ln() const;
    Real exp() const;
    /// Square root; requires a strictly positive ball (throws domain_error).
    Real sqrt() const;
    Real pow_int(long k) const;
    /// ln(max(x, 1)) >= 0, tolerating balls that straddle 1 (heights).
    Real ln_plus() const;

    /// Smallest integer >= upper endpoint.
    mpz_class ceil_upper() const;
    /// floor of the ball if certified (both endpoints share it).
    bool floor_certain(mpz_class& out) const;

    std::string midpoint_decimal(size_t digits = 40) const;
    std::string radius_decimal() const;
    std::string str(size_t digits = 20) const;
    double approx() const;

  private:
    Real(unsigned bits, int /*tag*/);  // uninitialized-value ctor
    void set_interval(const mpq_class& lo, const mpq_class& hi);
    static Real unary_monotone(const Real& x, int (*op)(mpfr_t, const mpfr_t, mpfr_rnd_t),
                               unsigned bits);

    mpfr_t mid_;
    mpfr_t rad_;
    unsigned bits_;
};

/// Re-evaluable real expression: the reduction and pipeline layers escalate
/// precision by calling the generator again with more bits.
using RealFn = std::function<Real(unsigned)>;

/// gamma = 1 + sqrt(2); rejects bits < 32.
Real const_gamma(unsigned bits);
/// delta = 1 - sqrt(2).
Real const_delta(unsigned bits);
Real const_sqrt2(unsigned bits);
Real const_ln2(unsigned bits);
Real const_ln3(unsigned bits);

/// Evaluate `fn` at doubling precision until its sign certifies, up to
/// `cap` bits. Returns Uncertain if the cap is reached.
Sign certify_sign(const RealFn& fn, unsigned start_bits, unsigned cap, Real* out = nullptr);

const char* to_string(Sign s);

}  // namespace pelljac
