#pragma once

#include <optional>
#include <string>

#include "lacuna/rational.hpp"

namespace lacuna {

// Every engine works internally at the requested digit count plus this many
// guard digits, so per-term rounding slack stays far below the final budget
// and D-digit renderings are pinned.
inline constexpr int kGuardDigits = 10;

// A fixed-point decimal paired with a rigorous absolute-error radius.
// value = mantissa * 10^-scale, and the represented real is guaranteed to
// lie in [value - error, value + error]. Operations never drop error; every
// result encloses the exact interval image, rounded outward.
class CertifiedDecimal {
public:
    CertifiedDecimal() : mantissa_(0), scale_(0), error_(0) {}
    CertifiedDecimal(BigInt mantissa, int scale, Rational error);

    static CertifiedDecimal exact_integer(const BigInt& n);
    // Nearest fixed-point value at the given scale; the stored error is the
    // exact representation error (0 when r is representable).
    static CertifiedDecimal from_rational(const Rational& r, int digits);

    const BigInt& mantissa() const { return mantissa_; }
    int scale() const { return scale_; }
    const Rational& error() const { return error_; }

    Rational value() const;
    Rational lower() const;
    Rational upper() const;
    bool contains(const Rational& r) const;

private:
    BigInt mantissa_;
    int scale_;
    Rational error_;
};

CertifiedDecimal add(const CertifiedDecimal& a, const CertifiedDecimal& b);
CertifiedDecimal mul(const CertifiedDecimal& a, const CertifiedDecimal& b);

inline CertifiedDecimal operator+(const CertifiedDecimal& a, const CertifiedDecimal& b) {
    return add(a, b);
}
inline CertifiedDecimal operator*(const CertifiedDecimal& a, const CertifiedDecimal& b) {
    return mul(a, b);
}

// Encloses 1/q with error <= 10^-digits. Throws ZeroDenominator when q = 0.
CertifiedDecimal recip_int_plus(const Rational& q, int digits);

// Re-express at the given scale; the interval still encloses the input's.
CertifiedDecimal round_to_digits(const CertifiedDecimal& a, int digits);

// floor(r * 10^digits + 1/2): the scaled mantissa of r rounded half-up.
BigInt nearest_scaled(const Rational& r, int digits);

// "mmm.ddd" with exactly `digits` places after the point (none when 0).
std::string decimal_string(const BigInt& scaled, int digits);

// The D-digit correctly-rounded string, present only when every real in the
// interval rounds to the same string (i.e. the interval pins all D digits).
std::optional<std::string> render_pinned(const CertifiedDecimal& v, int digits);

// "<digits> ± 1e-<k>" (or "<digits> ± 0" for exact values).
std::string render_with_radius(const CertifiedDecimal& v);

// Largest d <= requested whose rendering is pinned; -1 if none is.
int certified_digits(const CertifiedDecimal& v, int requested);

// Largest k with error <= 10^-k; nullopt for an exact value (error = 0).
std::optional<int> error_exponent(const Rational& error);

}  // namespace lacuna
