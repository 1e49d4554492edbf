#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lacuna/decimal.hpp"

namespace lacuna {

// |x| >= 1: all-positive lacunary series diverge there, so certified
// evaluation refuses the input instead of attempting continuation.
struct DivergentInput : std::domain_error {
    explicit DivergentInput(const std::string& what) : std::domain_error(what) {}
};

// Certified truncation needs a growth bound on the coefficients; a rule
// supplied without one cannot be evaluated.
struct UnboundedCoefficients : std::domain_error {
    UnboundedCoefficients()
        : std::domain_error("no coefficient bound available for certified evaluation") {}
};

// n(n+1)/2
BigInt trigonal_exponent(const BigInt& n);

// A strictly increasing generator of non-negative integer exponents.
class ExponentSequence {
public:
    static ExponentSequence geometric(unsigned long base);   // base >= 2: a^n
    static ExponentSequence polygonal(unsigned long order);  // s >= 3: ((s-2)n^2 - (s-4)n)/2
    static ExponentSequence trigonal();                      // polygonal(3)
    static ExponentSequence squares();                       // n^2
    // Validated at construction: non-negative and strictly increasing.
    static ExponentSequence explicit_list(std::vector<BigInt> exponents);

    BigInt at(std::size_t n) const;
    // Number of available terms; nullopt for the infinite generators.
    std::optional<std::size_t> length() const { return length_; }
    const std::string& describe() const { return describe_; }

private:
    ExponentSequence(std::function<BigInt(std::size_t)> gen,
                     std::optional<std::size_t> length, std::string describe);

    std::function<BigInt(std::size_t)> gen_;
    std::optional<std::size_t> length_;
    std::string describe_;
};

// True iff the first `probe` exponents have constant difference (the series
// then collapses to a rational function of x). probe >= 3; shorter explicit
// lists are probed over what exists and count as degenerate progressions.
bool is_arithmetic_progression(const ExponentSequence& e, std::size_t probe);

// |A_n| <= scale * (n+1)^degree, the growth bound certified tails rely on.
struct CoefficientBound {
    Rational scale;
    unsigned degree = 0;
};

// Coefficient rule + exponent sequence: y = sum A_n x^(alpha_n).
class LacunarySeries {
public:
    // All-ones coefficients (bound 1 * (n+1)^0).
    explicit LacunarySeries(ExponentSequence exponents);
    // Listed coefficients, zero after the list ends: a finite certified sum.
    LacunarySeries(ExponentSequence exponents, std::vector<Rational> coefficients);
    // Arbitrary total rule; certified evaluation requires the bound.
    LacunarySeries(ExponentSequence exponents, std::function<Rational(std::size_t)> rule,
                   std::optional<CoefficientBound> bound);

    Rational coefficient(std::size_t n) const { return rule_(n); }
    const ExponentSequence& exponents() const { return exponents_; }
    const std::optional<CoefficientBound>& bound() const { return bound_; }
    // Set when the sum is provably finite (explicit exponents and/or a
    // zero-extended coefficient list); evaluation then has zero tail.
    std::optional<std::size_t> term_count() const { return term_count_; }

private:
    ExponentSequence exponents_;
    std::function<Rational(std::size_t)> rule_;
    std::optional<CoefficientBound> bound_;
    std::optional<std::size_t> term_count_;
};

// Certified evaluation of y = sum A_n x^(alpha_n) for |x| < 1, with
// error <= 10^-digits (internally much tighter; see kGuardDigits).
//
// Truncation: with |A_n| <= C (n+1)^d and strictly increasing integer
// exponents, alpha_n >= alpha_N + (n - N) for n >= N, so
//   sum_{n>=N} |A_n| |x|^(alpha_n)
//     <= C (N+1)^d |x|^(alpha_N) sum_{m>=0} (1+m)^d |x|^m    [(N+1+m)^d <= ((N+1)(1+m))^d]
//     <= C (N+1)^d d! |x|^(alpha_N) / (1-|x|)^(d+1)          [(1+m)^d <= d! C(m+d,d)]
// The loop stops at the first N where this bound fits the budget.
CertifiedDecimal eval_series(const LacunarySeries& s, const Rational& x, int digits);

}  // namespace lacuna
