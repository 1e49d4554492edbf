#include "lacuna/rational.hpp"

#include <cctype>

namespace lacuna {

namespace {

[[noreturn]] void bad_rational(const std::string& text) {
    throw std::invalid_argument("not a rational: '" + text + "'");
}

// Optional sign followed by at least one digit, nothing else.
bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_integer(const std::string& s, const std::string& whole) {
    if (!is_integer_literal(s)) bad_rational(whole);
    return BigInt(s);
}

}  // namespace

BigInt pow10(unsigned long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

Rational pow_rational(const Rational& x, unsigned long n) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), n);  // 0^0 = 1 per mpz_pow_ui
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), n);
    Rational r(num, den);  // already coprime: powers of coprime integers
    return r;
}

Rational parse_rational(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        BigInt num = parse_integer(text.substr(0, slash), text);
        BigInt den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) bad_rational(text);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        bool negative = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head.erase(0, 1);
        if (head.empty() && frac.empty()) bad_rational(text);
        for (const std::string* part : {&head, &frac})
            for (char c : *part)
                if (!std::isdigit(static_cast<unsigned char>(c))) bad_rational(text);
        BigInt num = head.empty() ? BigInt(0) : BigInt(head);
        num *= pow10(frac.size());
        if (!frac.empty()) num += BigInt(frac);
        if (negative) num = -num;
        Rational r(num, pow10(frac.size()));
        r.canonicalize();
        return r;
    }
    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace lacuna
