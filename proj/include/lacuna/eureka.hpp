#pragma once

#include <cstddef>
#include <vector>

#include "lacuna/rational.hpp"

namespace lacuna {

// Truncated power series with exact integer coefficients, dense storage.
// Arithmetic truncates at the smaller of the two degrees.
class IntPolySeries {
public:
    explicit IntPolySeries(std::size_t degree) : coeffs_(degree + 1) {}
    explicit IntPolySeries(std::vector<BigInt> coefficients);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const BigInt& coeff(std::size_t i) const { return coeffs_.at(i); }
    BigInt& coeff(std::size_t i) { return coeffs_.at(i); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool operator==(const IntPolySeries&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

// 1 + x + x^3 + x^6 + x^10 + ... truncated at the given degree: coefficient
// of x^m is 1 iff m is a trigonal number.
IntPolySeries trigonal_gf(std::size_t degree);

// Schoolbook Cauchy product, truncated at min(deg p, deg q).
IntPolySeries multiply(const IntPolySeries& p, const IntPolySeries& q);

// Cube of the trigonal generating function: coefficient of x^n is r3(n),
// the number of ordered triples of trigonal numbers summing to n.
IntPolySeries cube_trigonal(std::size_t degree);

// Independent verifier: counts ordered triples by a direct double loop with
// the third component membership-tested (8m+1 a perfect square).
unsigned long oracle_r3(std::size_t n);

bool is_trigonal_number(const BigInt& m);

struct VerificationReport {
    std::size_t checked = 0;              // N+1 coefficients examined
    std::vector<std::size_t> failures;    // n with r3(n) = 0, expected empty
};

// Checks every coefficient of the cube up to the bound. The theorem is
// reported on, never assumed: a zero coefficient lands in `failures`.
VerificationReport verify_three_trigonal(std::size_t bound);

// Exact Horner evaluation at a rational point (test support).
Rational eval_poly(const IntPolySeries& p, const Rational& x);

}  // namespace lacuna
