#pragma once

#include <optional>
#include <vector>

#include "lacuna/decimal.hpp"

namespace lacuna {

enum class SignPattern { uniform, alternating };

// fixed:   y = sum_{k>=0} sigma_k / (a^k + x)
// powered: y = sum_{k>=0} sigma_k / (a^k + x^k)   (k = 0 term is 1/(1+1))
enum class ArgMode { fixed, powered };

// The curve family parameters. The library accepts any rational base > 1
// (base = 1 would make every ordinate infinite and is rejected).
struct CurveSpec {
    Rational base;
    SignPattern signs = SignPattern::uniform;
    ArgMode argmode = ArgMode::fixed;

    CurveSpec(Rational base_, SignPattern signs_ = SignPattern::uniform,
              ArgMode argmode_ = ArgMode::fixed);
};

// x hit a singular term: x = -a^k (fixed mode) or x = -a (powered, k = 1).
struct PoleError : std::domain_error {
    PoleError(long index_, const Rational& at);
    long index;
    Rational at;
};

// Exact pole membership test; returns the singular term's index.
std::optional<long> pole_index(const CurveSpec& c, const Rational& x);

// Poles with index <= upto. Fixed mode: -1, -a, ..., -a^upto. Powered mode:
// x^k = -a^k has the single rational solution x = -a (odd k), so just {-a}.
std::vector<Rational> poles(const CurveSpec& c, long upto);

// Exact ordinate at x = 0, from the closed geometric sums:
//   fixed+uniform  a/(a-1)      fixed+alternating  a/(a+1)
//   powered+uniform  1/2 + 1/(a-1)   powered+alternating  1/2 - 1/(a+1)
Rational value_at_zero(const CurveSpec& c);

// Certified evaluation at any non-pole rational x, error <= 10^-digits.
// Early terms (before the a^k resp. |x|^k term dominates its partner in the
// denominator) are summed exactly as rationals; once 2*small <= big the
// terms are bounded by 2*g^-k for a fixed ratio g > 1 and the remainder is
// enclosed by the geometric tail 2*g^(1-K)/(g-1).
CertifiedDecimal eval_curve(const CurveSpec& c, const Rational& x, int digits);

struct SampleRow {
    Rational x;
    std::optional<CertifiedDecimal> y;  // empty when the abscissa is a pole
    std::optional<long> pole_k;
};

// steps equally spaced abscissas across [from, to], endpoints included.
// Requires from < to and steps >= 2.
std::vector<SampleRow> sample_curve(const CurveSpec& c, const Rational& from,
                                    const Rational& to, long steps, int digits);

}  // namespace lacuna
