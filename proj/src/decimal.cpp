#include "lacuna/decimal.hpp"

#include <algorithm>

namespace lacuna {

CertifiedDecimal::CertifiedDecimal(BigInt mantissa, int scale, Rational error)
    : mantissa_(std::move(mantissa)), scale_(scale), error_(std::move(error)) {
    if (scale_ < 0) throw std::invalid_argument("negative scale");
    if (error_ < 0) throw std::invalid_argument("negative error radius");
}

CertifiedDecimal CertifiedDecimal::exact_integer(const BigInt& n) {
    return CertifiedDecimal(n, 0, Rational(0));
}

CertifiedDecimal CertifiedDecimal::from_rational(const Rational& r, int digits) {
    BigInt m = nearest_scaled(r, digits);
    Rational v(m, pow10(digits));
    v.canonicalize();
    Rational err = abs(r - v);
    return CertifiedDecimal(std::move(m), digits, std::move(err));
}

Rational CertifiedDecimal::value() const {
    Rational v(mantissa_, pow10(scale_));
    v.canonicalize();
    return v;
}

Rational CertifiedDecimal::lower() const { return value() - error_; }
Rational CertifiedDecimal::upper() const { return value() + error_; }

bool CertifiedDecimal::contains(const Rational& r) const {
    return lower() <= r && r <= upper();
}

CertifiedDecimal add(const CertifiedDecimal& a, const CertifiedDecimal& b) {
    // Both operands are decimal fixed-point, so the sum is exact at the
    // coarser scale: no rounding slack at all.
    int s = std::max(a.scale(), b.scale());
    BigInt m = a.mantissa() * pow10(s - a.scale()) + b.mantissa() * pow10(s - b.scale());
    return CertifiedDecimal(std::move(m), s, a.error() + b.error());
}

CertifiedDecimal mul(const CertifiedDecimal& a, const CertifiedDecimal& b) {
    // Exact product of the centers; the radius is the exact interval-product
    // deviation |a|eb + |b|ea + ea*eb.
    BigInt m = a.mantissa() * b.mantissa();
    Rational err = abs(a.value()) * b.error() + abs(b.value()) * a.error() +
                   a.error() * b.error();
    return CertifiedDecimal(std::move(m), a.scale() + b.scale(), std::move(err));
}

CertifiedDecimal recip_int_plus(const Rational& q, int digits) {
    if (q == 0) throw ZeroDenominator();
    Rational inv(q.get_den(), q.get_num());
    inv.canonicalize();
    return CertifiedDecimal::from_rational(inv, digits);
}

CertifiedDecimal round_to_digits(const CertifiedDecimal& a, int digits) {
    BigInt m = nearest_scaled(a.value(), digits);
    Rational v(m, pow10(digits));
    v.canonicalize();
    Rational err = a.error() + abs(a.value() - v);
    return CertifiedDecimal(std::move(m), digits, std::move(err));
}

BigInt nearest_scaled(const Rational& r, int digits) {
    Rational t = r * Rational(pow10(digits));
    t += Rational(1, 2);
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    return q;
}

std::string decimal_string(const BigInt& scaled, int digits) {
    std::string body = BigInt(abs(scaled)).get_str();
    std::string sign = scaled < 0 ? "-" : "";
    if (digits == 0) return sign + body;
    if (body.size() <= static_cast<std::size_t>(digits))
        body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return sign + body;
}

std::optional<std::string> render_pinned(const CertifiedDecimal& v, int digits) {
    BigInt lo = nearest_scaled(v.lower(), digits);
    BigInt hi = nearest_scaled(v.upper(), digits);
    if (lo != hi) return std::nullopt;
    return decimal_string(lo, digits);
}

std::string render_with_radius(const CertifiedDecimal& v) {
    std::string body = decimal_string(v.mantissa(), v.scale());
    auto k = error_exponent(v.error());
    if (!k) return body + " ± 0";
    return body + " ± 1e-" + std::to_string(*k);
}

int certified_digits(const CertifiedDecimal& v, int requested) {
    for (int d = requested; d >= 0; --d)
        if (render_pinned(v, d)) return d;
    return -1;
}

std::optional<int> error_exponent(const Rational& error) {
    if (error == 0) return std::nullopt;
    // Largest k with error * 10^k <= 1.
    int k = 0;
    Rational t = error;
    if (t <= 1) {
        while (t * 10 <= 1) {
            t *= 10;
            ++k;
        }
    } else {
        while (t > 1) {
            t /= 10;
            --k;
        }
    }
    return k;
}

}  // namespace lacuna
