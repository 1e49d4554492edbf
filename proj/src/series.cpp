#include "lacuna/series.hpp"

#include <limits>
#include <memory>
#include <utility>

namespace lacuna {

namespace {

// Past this many squarings of the argument any remaining term is far below
// every representable budget; capping keeps mpz_pow_ui exponents sane while
// only ever making the tail check more conservative (|x| < 1).
constexpr unsigned long kDeltaCap = 1u << 24;

Rational factorial(unsigned n) {
    Rational f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Rational int_power(std::size_t base, unsigned deg) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, deg);
    return Rational(r);
}

}  // namespace

BigInt trigonal_exponent(const BigInt& n) {
    BigInt t = n * (n + 1);
    return t / 2;
}

ExponentSequence::ExponentSequence(std::function<BigInt(std::size_t)> gen,
                                   std::optional<std::size_t> length, std::string describe)
    : gen_(std::move(gen)), length_(length), describe_(std::move(describe)) {}

ExponentSequence ExponentSequence::geometric(unsigned long base) {
    if (base < 2) throw std::invalid_argument("geometric exponent base must be >= 2");
    return ExponentSequence(
        [base](std::size_t n) {
            BigInt r;
            mpz_ui_pow_ui(r.get_mpz_t(), base, n);
            return r;
        },
        std::nullopt, "geometric:" + std::to_string(base));
}

ExponentSequence ExponentSequence::polygonal(unsigned long order) {
    if (order < 3) throw std::invalid_argument("polygonal order must be >= 3");
    std::string name = order == 3 ? "trigonal" : "polygonal:" + std::to_string(order);
    // signed big-int arithmetic: order - 4 is negative for the trigonal case
    BigInt a = BigInt(order) - 2;
    BigInt b = BigInt(order) - 4;
    return ExponentSequence(
        [a, b](std::size_t n) {
            BigInt k(static_cast<unsigned long>(n));
            BigInt t = a * k * k - b * k;
            return BigInt(t / 2);
        },
        std::nullopt, std::move(name));
}

ExponentSequence ExponentSequence::trigonal() { return polygonal(3); }

ExponentSequence ExponentSequence::squares() {
    return ExponentSequence(
        [](std::size_t n) {
            BigInt k(static_cast<unsigned long>(n));
            return BigInt(k * k);
        },
        std::nullopt, "squares");
}

ExponentSequence ExponentSequence::explicit_list(std::vector<BigInt> exponents) {
    if (exponents.empty()) throw std::invalid_argument("explicit exponent list is empty");
    if (exponents.front() < 0) throw std::invalid_argument("exponents must be non-negative");
    for (std::size_t i = 1; i < exponents.size(); ++i)
        if (exponents[i] <= exponents[i - 1])
            throw std::invalid_argument("exponents must be strictly increasing");
    auto list = std::make_shared<std::vector<BigInt>>(std::move(exponents));
    std::string name = "explicit:";
    for (std::size_t i = 0; i < list->size(); ++i) {
        if (i) name += ',';
        name += (*list)[i].get_str();
    }
    std::size_t n = list->size();
    return ExponentSequence([list](std::size_t i) { return list->at(i); }, n, std::move(name));
}

BigInt ExponentSequence::at(std::size_t n) const {
    if (length_ && n >= *length_) throw std::out_of_range("exponent index past end of list");
    return gen_(n);
}

bool is_arithmetic_progression(const ExponentSequence& e, std::size_t probe) {
    if (probe < 3) throw std::invalid_argument("progression probe needs at least 3 terms");
    if (e.length()) probe = std::min(probe, *e.length());
    if (probe < 3) return true;  // too short to witness a changing difference
    BigInt diff = e.at(1) - e.at(0);
    for (std::size_t n = 1; n + 1 < probe; ++n)
        if (e.at(n + 1) - e.at(n) != diff) return false;
    return true;
}

LacunarySeries::LacunarySeries(ExponentSequence exponents)
    : exponents_(std::move(exponents)),
      rule_([](std::size_t) { return Rational(1); }),
      bound_(CoefficientBound{Rational(1), 0}),
      term_count_(exponents_.length()) {}

LacunarySeries::LacunarySeries(ExponentSequence exponents, std::vector<Rational> coefficients)
    : exponents_(std::move(exponents)) {
    auto list = std::make_shared<std::vector<Rational>>(std::move(coefficients));
    rule_ = [list](std::size_t n) { return n < list->size() ? (*list)[n] : Rational(0); };
    Rational top(0);
    for (const Rational& c : *list) top = std::max(top, Rational(abs(c)));
    bound_ = CoefficientBound{top, 0};
    term_count_ = list->size();
    if (exponents_.length()) term_count_ = std::min(*term_count_, *exponents_.length());
}

LacunarySeries::LacunarySeries(ExponentSequence exponents,
                               std::function<Rational(std::size_t)> rule,
                               std::optional<CoefficientBound> bound)
    : exponents_(std::move(exponents)),
      rule_(std::move(rule)),
      bound_(std::move(bound)),
      term_count_(exponents_.length()) {}

CertifiedDecimal eval_series(const LacunarySeries& s, const Rational& x, int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    Rational ax = abs(x);
    if (ax >= 1)
        throw DivergentInput("|x| >= 1 is outside the certified-convergence domain (|x| < 1)");
    std::optional<std::size_t> nterms = s.term_count();
    if (!nterms && !s.bound()) throw UnboundedCoefficients();

    const int W = digits + kGuardDigits;
    const BigInt T = pow10(W);
    const Rational ulp = Rational(1) / Rational(T);
    const Rational half_budget = ulp / 2;

    // C * d! / (1-|x|)^(d+1), constant across the loop (see header).
    Rational tail_factor = 0;
    unsigned deg = 0;
    if (s.bound()) {
        deg = s.bound()->degree;
        tail_factor = s.bound()->scale * factorial(deg) / pow_rational(1 - ax, deg + 1);
    }

    Rational sum = 0;
    Rational tail = 0;
    Rational ax_pow = 1;  // |x|^(alpha_{n-1}) once n > 0
    BigInt prev_exp = 0;
    bool negative_x = x < 0;
    const bool finite = nterms.has_value();
    const std::size_t limit = finite ? *nterms : std::numeric_limits<std::size_t>::max();

    for (std::size_t n = 0;; ++n) {
        if (n >= limit) break;  // finite sum, zero tail
        BigInt e = s.exponents().at(n);
        if (e < 0 || (n > 0 && e <= prev_exp))
            throw std::logic_error("exponent sequence is not strictly increasing");
        BigInt delta = n == 0 ? e : BigInt(e - prev_exp);
        bool capped = !delta.fits_ulong_p() || delta.get_ui() > kDeltaCap;
        unsigned long step = capped ? kDeltaCap : delta.get_ui();
        Rational candidate = ax_pow * pow_rational(ax, step);  // >= |x|^(alpha_n) when capped
        if (!finite) {
            Rational tb = tail_factor * int_power(n + 1, deg) * candidate;
            if (tb <= half_budget) {
                // half_budget bounds tb from above and keeps the stored error
                // radius representationally small
                tail = half_budget;
                break;
            }
        }
        if (capped)
            throw std::overflow_error("exponent gap too large for the requested precision");
        ax_pow = candidate;
        prev_exp = e;
        Rational term = s.coefficient(n) * ax_pow;
        if (negative_x && mpz_odd_p(e.get_mpz_t())) term = -term;
        sum += term;
    }

    Rational scaled = sum * Rational(T);
    BigInt mantissa;
    mpz_fdiv_q(mantissa.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    Rational err = tail + ulp;
    return CertifiedDecimal(std::move(mantissa), W, std::move(err));
}

}  // namespace lacuna
