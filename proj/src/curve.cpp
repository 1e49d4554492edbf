#include "lacuna/curve.hpp"

namespace lacuna {

CurveSpec::CurveSpec(Rational base_, SignPattern signs_, ArgMode argmode_)
    : base(std::move(base_)), signs(signs_), argmode(argmode_) {
    if (base <= 1)
        throw std::invalid_argument("curve base must exceed 1 (every ordinate is infinite at 1)");
}

PoleError::PoleError(long index_, const Rational& at_)
    : std::domain_error("pole at k=" + std::to_string(index_) + " (x = " + to_string(at_) + ")"),
      index(index_),
      at(at_) {}

std::optional<long> pole_index(const CurveSpec& c, const Rational& x) {
    if (x >= 0) return std::nullopt;
    if (c.argmode == ArgMode::powered)
        return x == -c.base ? std::optional<long>(1) : std::nullopt;
    Rational target = -x;
    Rational apow = 1;
    for (long k = 0; apow <= target; ++k) {
        if (apow == target) return k;
        apow *= c.base;
    }
    return std::nullopt;
}

std::vector<Rational> poles(const CurveSpec& c, long upto) {
    if (upto < 0) throw std::invalid_argument("pole index bound must be >= 0");
    if (c.argmode == ArgMode::powered) return {Rational(-c.base)};
    std::vector<Rational> out;
    Rational apow = 1;
    for (long k = 0; k <= upto; ++k) {
        out.push_back(Rational(-apow));
        apow *= c.base;
    }
    return out;
}

Rational value_at_zero(const CurveSpec& c) {
    const Rational& a = c.base;
    bool alternating = c.signs == SignPattern::alternating;
    if (c.argmode == ArgMode::fixed)
        return alternating ? Rational(a / (a + 1)) : Rational(a / (a - 1));
    // k = 0 term is 1/(1+1); the rest is the signed geometric sum over a^-k.
    if (alternating) return Rational(1, 2) - 1 / (a + 1);
    return Rational(1, 2) + 1 / (a - 1);
}

CertifiedDecimal eval_curve(const CurveSpec& c, const Rational& x, int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    if (auto k = pole_index(c, x)) throw PoleError(*k, x);

    const int W = digits + kGuardDigits;
    const BigInt T = pow10(W);
    const Rational ulp = Rational(1) / Rational(T);
    const Rational& a = c.base;
    const Rational ax = abs(x);
    const bool powered = c.argmode == ArgMode::powered;

    // Domination threshold K0 and geometric ratio g: for k >= K0 the larger
    // denominator part is at least twice the smaller, so |term_k| <= 2 g^-k.
    // (For x >= 0 every denominator already exceeds the dominant part.)
    Rational g = a;
    long K0 = 0;
    if (x < 0) {
        if (!powered) {
            Rational apow = 1;
            while (apow < 2 * ax) {
                apow *= a;
                ++K0;
            }
        } else if (ax < a) {
            Rational r = a / ax, t = 1;
            while (t < 2) {
                t *= r;
                ++K0;
            }
        } else {  // ax > a; ax == a is the pole, excluded above
            g = ax;
            Rational r = ax / a, t = 1;
            while (t < 2) {
                t *= r;
                ++K0;
            }
        }
    } else if (powered && x > a) {
        g = x;  // x^k dominates; terms <= x^-k anyway
    }

    // Extend K until the geometric tail 2 g^(1-K)/(g-1) <= ulp/2,
    // i.e. (g-1) g^K >= 4 g 10^W.
    long K = K0;
    Rational gpow = pow_rational(g, static_cast<unsigned long>(K0));
    const Rational need = 4 * g * Rational(T);
    while ((g - 1) * gpow < need) {
        gpow *= g;
        ++K;
    }

    BigInt acc = 0;
    Rational apow = 1, xpow = 1;
    for (long k = 0; k < K; ++k) {
        Rational den = powered ? Rational(apow + xpow) : Rational(apow + x);
        Rational term = Rational(1) / den;
        if (c.signs == SignPattern::alternating && (k & 1)) term = -term;
        Rational scaled = term * Rational(T);
        BigInt m;
        mpz_fdiv_q(m.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
        acc += m;
        apow *= a;
        if (powered) xpow *= x;
    }

    Rational tail = 2 * g / ((g - 1) * gpow);
    Rational err = tail + Rational(K) * ulp;
    return CertifiedDecimal(std::move(acc), W, std::move(err));
}

std::vector<SampleRow> sample_curve(const CurveSpec& c, const Rational& from,
                                    const Rational& to, long steps, int digits) {
    if (!(from < to)) throw std::invalid_argument("sample range needs from < to");
    if (steps < 2) throw std::invalid_argument("sampling needs at least 2 steps");
    Rational span = to - from;
    std::vector<SampleRow> rows;
    rows.reserve(steps);
    for (long i = 0; i < steps; ++i) {
        Rational xi = from + span * Rational(i) / Rational(steps - 1);
        SampleRow row;
        row.x = xi;
        if (auto k = pole_index(c, xi)) {
            row.pole_k = *k;
        } else {
            row.y = eval_curve(c, xi, digits);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace lacuna
