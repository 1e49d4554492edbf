#include "lacuna/eureka.hpp"

#include <stdexcept>

#include "lacuna/series.hpp"

namespace lacuna {

IntPolySeries::IntPolySeries(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

IntPolySeries trigonal_gf(std::size_t degree) {
    IntPolySeries p(degree);
    for (BigInt n = 0;; ++n) {
        BigInt t = trigonal_exponent(n);
        if (t > degree) break;
        p.coeff(t.get_ui()) = 1;
    }
    return p;
}

IntPolySeries multiply(const IntPolySeries& p, const IntPolySeries& q) {
    std::size_t n = std::min(p.degree(), q.degree());
    IntPolySeries out(n);
    for (std::size_t i = 0; i <= std::min(p.degree(), n); ++i) {
        if (p.coeff(i) == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (q.coeff(j) == 0) continue;
            mpz_addmul(out.coeff(i + j).get_mpz_t(), p.coeff(i).get_mpz_t(),
                       q.coeff(j).get_mpz_t());
        }
    }
    return out;
}

IntPolySeries cube_trigonal(std::size_t degree) {
    IntPolySeries g = trigonal_gf(degree);
    return multiply(g, multiply(g, g));
}

bool is_trigonal_number(const BigInt& m) {
    if (m < 0) return false;
    BigInt probe = 8 * m + 1;
    return mpz_perfect_square_p(probe.get_mpz_t()) != 0;
}

unsigned long oracle_r3(std::size_t n) {
    unsigned long count = 0;
    for (std::size_t a = 0, ta = 0; ta <= n; ++a, ta = a * (a + 1) / 2) {
        for (std::size_t b = 0, tb = 0; ta + tb <= n; ++b, tb = b * (b + 1) / 2) {
            if (is_trigonal_number(BigInt(static_cast<unsigned long>(n - ta - tb)))) ++count;
        }
    }
    return count;
}

VerificationReport verify_three_trigonal(std::size_t bound) {
    IntPolySeries cube = cube_trigonal(bound);
    VerificationReport report;
    report.checked = bound + 1;
    for (std::size_t i = 0; i <= bound; ++i)
        if (cube.coeff(i) == 0) report.failures.push_back(i);
    return report;
}

Rational eval_poly(const IntPolySeries& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.degree() + 1; i-- > 0;) acc = acc * x + Rational(p.coeff(i));
    return acc;
}

}  // namespace lacuna
