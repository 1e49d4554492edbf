#include "lacuna/erdos_borwein.hpp"

namespace lacuna {

namespace {

// 2^-e as an exact rational.
Rational inv_pow2(unsigned long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    Rational r(BigInt(1), p);
    return r;
}

BigInt floor_shift(const BigInt& v, unsigned long e) {
    BigInt q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), v.get_mpz_t(), e);
    return q;
}

}  // namespace

// Direct route. Since 2^n - 1 >= 2^(n-1) for n >= 1, the truncated tail obeys
// sum_{k>n} 1/(2^k - 1) <= sum_{k>n} 2^(1-k) = 2^(1-n).
CertifiedDecimal eb_direct(int digits, EbStats* stats) {
    const int W = digits + kGuardDigits;
    const BigInt T = pow10(W);
    const Rational ulp = Rational(1) / Rational(T);
    // Stop once 2^(1-n) <= ulp/2, i.e. 2^(n-1) >= 2*10^W.
    const BigInt two_T = 2 * T;
    const std::size_t stop_bits = mpz_sizeinbase(two_T.get_mpz_t(), 2);

    BigInt acc = 0;
    BigInt pow2 = 1;
    unsigned long n = 0;
    while (true) {
        ++n;
        pow2 <<= 1;
        BigInt den = pow2 - 1;
        BigInt term;
        mpz_fdiv_q(term.get_mpz_t(), T.get_mpz_t(), den.get_mpz_t());
        acc += term;
        if (n - 1 >= stop_bits) break;  // 2^(n-1) >= 2^stop_bits > 2*10^W
    }
    if (stats) stats->terms = n;

    Rational tail(BigInt(2), pow2);  // 2^(1-n)
    tail.canonicalize();
    Rational err = tail + Rational(n) * ulp;
    return CertifiedDecimal(std::move(acc), W, std::move(err));
}

// Theta route: Theta_0 + 2 sum_{k>=1} Theta_k with Theta_k = sum_{x>=1} 2^-(x^2+kx).
// This is the diagonal regrouping of the lattice sum over pairs (m,n >= 1) of
// 2^-mn (each row being the geometric expansion of 1/(2^n - 1)): m = n gives
// the diagonal 2^-(x^2) and each off-diagonal pair {x, x+k} is counted twice.
//
// Inner tails: consecutive terms shrink by 2^-(2x+1+k) <= 1/8, so the tail
// past x is at most twice the next term. Outer tail: Theta_k <= 2*2^-(1+k),
// so sum_{k>K} 2*Theta_k <= 2^(1-K).
CertifiedDecimal eb_theta(int digits, EbStats* stats) {
    const int W = digits + kGuardDigits;
    const BigInt T = pow10(W);
    const Rational ulp = Rational(1) / Rational(T);
    // Per-sum cut: bound each truncated piece by 10^-(W+2).
    const BigInt cut = pow10(W + 2);
    const std::size_t cut_bits = mpz_sizeinbase(cut.get_mpz_t(), 2);

    BigInt acc = 0;
    unsigned long rounded_terms = 0;
    Rational trunc = 0;
    std::size_t total_terms = 0;
    std::size_t max_inner = 0;
    unsigned long k = 0;

    while (true) {
        std::size_t inner = 0;
        for (unsigned long x = 1;; ++x) {
            unsigned long e = x * (x + k);
            BigInt term = floor_shift(T, e);
            if (k == 0) {
                acc += term;
                rounded_terms += 1;
            } else {
                acc += 2 * term;
                rounded_terms += 2;
            }
            ++inner;
            unsigned long e_next = (x + 1) * (x + 1 + k);
            if (e_next - 1 >= cut_bits) {  // 2*2^-e_next <= 10^-(W+2)
                Rational inner_tail = 2 * inv_pow2(e_next);
                if (k > 0) inner_tail *= 2;
                trunc += inner_tail;
                break;
            }
        }
        total_terms += inner;
        max_inner = std::max(max_inner, inner);
        if (k >= 1 && k - 1 >= cut_bits) {  // outer tail 2^(1-k) <= 10^-(W+2)
            trunc += inv_pow2(k - 1);
            break;
        }
        ++k;
    }
    if (stats) {
        stats->terms = total_terms;
        stats->outer_terms = k + 1;
        stats->max_inner_terms = max_inner;
    }

    Rational err = trunc + Rational(rounded_terms) * ulp;
    return CertifiedDecimal(std::move(acc), W, std::move(err));
}

// Divisor route: expanding every 1/(2^n - 1) geometrically and collecting the
// lattice sum by products N = mn gives sum_{N>=1} d(N) 2^-N. With d(N) <= N,
//   sum_{N>M} N 2^-N = 2^-(M+1) ((M+1) - M/2) * 4 = (M+2) 2^-M
// (partial sum of the arithmetico-geometric series), the tail bound used here.
CertifiedDecimal eb_divisor(int digits, EbStats* stats) {
    const int W = digits + kGuardDigits;
    const BigInt T = pow10(W);
    const Rational ulp = Rational(1) / Rational(T);

    BigInt acc = 0;
    BigInt pow2 = 1;
    unsigned long n = 0;
    while (true) {
        ++n;
        pow2 <<= 1;
        BigInt num = BigInt(divisor_count(n)) * T;
        acc += floor_shift(num, n);
        // Stop once (n+2) 2^-n <= ulp/2, i.e. 2^n >= 2 (n+2) 10^W.
        BigInt need = 2 * (n + 2) * T;
        if (pow2 >= need) break;
    }
    if (stats) stats->terms = n;

    Rational tail(BigInt(n + 2), pow2);
    tail.canonicalize();
    Rational err = tail + Rational(n) * ulp;
    return CertifiedDecimal(std::move(acc), W, std::move(err));
}

CertifiedDecimal erdos_borwein(EbMethod method, int digits, EbStats* stats) {
    switch (method) {
        case EbMethod::direct: return eb_direct(digits, stats);
        case EbMethod::theta: return eb_theta(digits, stats);
        case EbMethod::divisor: return eb_divisor(digits, stats);
    }
    throw std::logic_error("unreachable");
}

CertifiedDecimal theta_diagonal(int digits) {
    const int W = digits + kGuardDigits;
    const BigInt T = pow10(W);
    const Rational ulp = Rational(1) / Rational(T);
    const BigInt cut = pow10(W + 2);
    const std::size_t cut_bits = mpz_sizeinbase(cut.get_mpz_t(), 2);

    BigInt acc = 0;
    unsigned long x = 0;
    Rational tail = 0;
    while (true) {
        ++x;
        acc += floor_shift(T, x * x);
        unsigned long e_next = (x + 1) * (x + 1);
        if (e_next - 1 >= cut_bits) {
            tail = 2 * inv_pow2(e_next);
            break;
        }
    }
    Rational err = tail + Rational(x) * ulp;
    return CertifiedDecimal(std::move(acc), W, std::move(err));
}

unsigned long divisor_count(unsigned long n) {
    unsigned long count = 0;
    for (unsigned long i = 1; i * i <= n; ++i) {
        if (n % i == 0) count += (i * i == n) ? 1 : 2;
    }
    return count;
}

}  // namespace lacuna
