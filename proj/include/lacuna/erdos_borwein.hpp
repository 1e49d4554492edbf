#pragma once

#include "lacuna/decimal.hpp"

namespace lacuna {

// The constant sum_{n>=1} 1/(2^n - 1), computed by three independent routes
// that cross-validate each other:
//   direct  - term-by-term sum of 1/(2^n - 1)
//   theta   - diagonal regrouping of the lattice sum 2^-mn:
//             Theta_0 + 2 sum_{k>=1} Theta_k, Theta_k = sum_{x>=1} 2^-(x^2+kx)
//   divisor - sum_{N>=1} d(N) 2^-N with d the divisor-count function
enum class EbMethod { direct, theta, divisor };

// Term-count bookkeeping for the (informational) speed-ordering check.
struct EbStats {
    std::size_t terms = 0;            // total terms summed
    std::size_t outer_terms = 0;      // theta only: number of k values
    std::size_t max_inner_terms = 0;  // theta only: longest inner sum
};

CertifiedDecimal eb_direct(int digits, EbStats* stats = nullptr);
CertifiedDecimal eb_theta(int digits, EbStats* stats = nullptr);
CertifiedDecimal eb_divisor(int digits, EbStats* stats = nullptr);
CertifiedDecimal erdos_borwein(EbMethod method, int digits, EbStats* stats = nullptr);

// The diagonal alone: sum_{x>=1} 2^-(x^2). Exposed so tests can compare it
// against an independent evaluation route (the squares exponent sequence).
CertifiedDecimal theta_diagonal(int digits);

// d(n) by trial division up to sqrt(n).
unsigned long divisor_count(unsigned long n);

}  // namespace lacuna
