#include <doctest.h>

#include "lacuna/erdos_borwein.hpp"
#include "lacuna/series.hpp"

using namespace lacuna;

namespace {
Rational rat(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational inv_pow2(unsigned long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    Rational r(BigInt(1), p);
    return r;
}
}  // namespace

TEST_CASE("printed nine-digit value, all three methods") {
    CHECK(render_pinned(eb_direct(9), 9) == "1.606695152");
    CHECK(render_pinned(eb_theta(9), 9) == "1.606695152");
    CHECK(render_pinned(eb_divisor(9), 9) == "1.606695152");
}

TEST_CASE("coarse request still encloses the constant") {
    CertifiedDecimal coarse = eb_direct(1);
    CHECK(render_pinned(coarse, 1) == "1.6");
    CHECK(coarse.error() <= rat(1, 10));
    // the 30-digit interval sits inside the 1-digit one
    CertifiedDecimal fine = eb_direct(30);
    CHECK(coarse.lower() <= fine.lower());
    CHECK(fine.upper() <= coarse.upper());
}

TEST_CASE("cross-method agreement at 30 and 40 digits") {
    for (int d : {30, 40}) {
        CertifiedDecimal a = eb_direct(d), b = eb_theta(d), c = eb_divisor(d);
        CHECK(abs(a.value() - b.value()) <= a.error() + b.error());
        CHECK(abs(a.value() - c.value()) <= a.error() + c.error());
        CHECK(abs(b.value() - c.value()) <= b.error() + c.error());
    }
}

TEST_CASE("three-way agreement for every digit count up to 200") {
    for (int d = 1; d <= 200; ++d) {
        CertifiedDecimal a = eb_direct(d), b = eb_theta(d), c = eb_divisor(d);
        Rational lo = std::max({a.lower(), b.lower(), c.lower()});
        Rational hi = std::min({a.upper(), b.upper(), c.upper()});
        REQUIRE(lo <= hi);  // pairwise intersection via the common point
        Rational width_cap = Rational(2) / Rational(pow10(d));
        REQUIRE(hi - lo <= width_cap);
    }
}

TEST_CASE("monotone refinement") {
    for (int d : {5, 20, 60}) {
        CertifiedDecimal coarse = eb_theta(d);
        CertifiedDecimal fine = eb_theta(d + 10);
        CHECK(fine.lower() >= coarse.lower() - coarse.error());
        CHECK(fine.upper() <= coarse.upper() + coarse.error());
        CHECK(std::max(fine.lower(), coarse.lower()) <= std::min(fine.upper(), coarse.upper()));
    }
}

TEST_CASE("diagonal theta sum agrees with the squares-exponent series route") {
    // sum_{x>=1} 2^-(x^2) vs eval_series with squares exponents at 1/2 minus
    // its n = 0 term (that sequence starts at exponent 0).
    const int d = 30;
    CertifiedDecimal diag = theta_diagonal(d);
    LacunarySeries squares{ExponentSequence::squares()};
    CertifiedDecimal via_series = eval_series(squares, rat(1, 2), d);
    Rational shifted = via_series.value() - 1;
    CHECK(abs(diag.value() - shifted) <= diag.error() + via_series.error());
    CHECK(abs(diag.value() - shifted) <= rat(1, 1) / Rational(pow10(d)));
}

TEST_CASE("stated truncation bound instantiated at k = 10") {
    // Theta_10 <= 2^-11 * 2 = 1/1024 < 10^-3
    Rational bound = inv_pow2(11) * 2;
    CHECK(bound < rat(1, 1000));
}

TEST_CASE("divisor tail closed form is exact") {
    // sum_{N>M} N 2^-N = (M+2) 2^-M: truncating after B more terms leaves
    // exactly the same expression shifted, so the identity closes.
    for (unsigned m : {1u, 4u, 10u, 25u}) {
        Rational partial_tail = 0;
        for (unsigned n = m + 1; n <= m + 64; ++n)
            partial_tail += Rational(n) * inv_pow2(n);
        Rational bound = Rational(m + 2) * inv_pow2(m);
        CHECK(partial_tail < bound);
        CHECK(partial_tail + Rational(m + 66) * inv_pow2(m + 64) == bound);
    }
}

TEST_CASE("divisor counts") {
    CHECK(divisor_count(1) == 1);
    CHECK(divisor_count(6) == 4);  // 1, 2, 3, 6 -> contributes 4/64
    CHECK(divisor_count(12) == 6);
    CHECK(divisor_count(28) == 6);
    CHECK(divisor_count(36) == 9);
    CHECK(divisor_count(97) == 2);
}

TEST_CASE("finite rearrangement identity, exact rationals") {
    // Rows n <= M of the lattice: 1/(2^n - 1) = sum_{m<=C} 2^-nm + 2^-nC/(2^n - 1)
    // exactly (geometric remainder), so the double truncation plus its exact
    // remainder reproduces the partial row sum.
    const unsigned M = 10, C = 12;
    Rational rows = 0;
    for (unsigned n = 1; n <= M; ++n) {
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
        den -= 1;
        Rational term(BigInt(1), den);
        term.canonicalize();
        rows += term;
    }
    Rational lattice = 0;
    for (unsigned n = 1; n <= M; ++n)
        for (unsigned m = 1; m <= C; ++m) lattice += inv_pow2(n * m);
    Rational remainder = 0;
    for (unsigned n = 1; n <= M; ++n) {
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
        den -= 1;
        Rational tail = inv_pow2(n * C) / Rational(den);
        remainder += tail;
    }
    CHECK(rows == lattice + remainder);
}

TEST_CASE("theta needs asymptotically fewer terms per sum than direct") {
    EbStats direct_small, theta_small, direct_big, theta_big;
    eb_direct(20, &direct_small);
    eb_theta(20, &theta_small);
    eb_direct(120, &direct_big);
    eb_theta(120, &theta_big);
    // max inner length grows ~ sqrt(D) while the direct term count grows ~ D.
    double small_ratio = double(theta_small.max_inner_terms) / double(direct_small.terms);
    double big_ratio = double(theta_big.max_inner_terms) / double(direct_big.terms);
    CHECK(big_ratio < small_ratio);
}

TEST_CASE("rounding a high-precision run reproduces the printed digits") {
    CertifiedDecimal fine = eb_direct(19);
    CertifiedDecimal rounded = round_to_digits(fine, 9);
    CHECK(render_pinned(rounded, 9) == "1.606695152");
    CHECK(rounded.lower() <= fine.lower());
    CHECK(rounded.upper() >= fine.upper());
}
