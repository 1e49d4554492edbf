#include "lacuna/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>

#include "lacuna/curve.hpp"
#include "lacuna/decimal.hpp"
#include "lacuna/erdos_borwein.hpp"
#include "lacuna/eureka.hpp"
#include "lacuna/series.hpp"

namespace lacuna {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        parts.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

ExponentSequence parse_exponent_spec(const std::string& spec) {
    if (spec == "trigonal") return ExponentSequence::trigonal();
    if (spec == "squares") return ExponentSequence::squares();
    auto param = [&](const std::string& prefix) -> std::optional<std::string> {
        if (spec.rfind(prefix, 0) == 0) return spec.substr(prefix.size());
        return std::nullopt;
    };
    auto as_ulong = [&](const std::string& s) {
        Rational r = parse_rational(s);
        if (r.get_den() != 1 || r < 0 || !r.get_num().fits_ulong_p())
            throw std::invalid_argument("bad parameter in exponent spec: '" + spec + "'");
        return r.get_num().get_ui();
    };
    if (auto p = param("geometric:")) return ExponentSequence::geometric(as_ulong(*p));
    if (auto p = param("polygonal:")) return ExponentSequence::polygonal(as_ulong(*p));
    if (auto p = param("explicit:")) {
        std::vector<BigInt> exps;
        for (const std::string& tok : split(*p, ',')) {
            Rational r = parse_rational(tok);
            if (r.get_den() != 1 || r < 0)
                throw std::invalid_argument("explicit exponents must be non-negative integers");
            exps.push_back(r.get_num());
        }
        return ExponentSequence::explicit_list(std::move(exps));
    }
    throw std::invalid_argument("unknown exponent spec '" + spec +
                                "' (try trigonal, squares, geometric:A, polygonal:S, explicit:...)");
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    for (const std::string& tok : split(s, ',')) out.push_back(parse_rational(tok));
    return out;
}

json value_json(const CertifiedDecimal& v, int digits) {
    int cd = certified_digits(v, digits);
    json jv;
    jv["digits"] = cd >= 0 ? *render_pinned(v, cd) : render_with_radius(v);
    auto ee = error_exponent(v.error());
    jv["error_exponent"] = ee ? json(*ee) : json(nullptr);
    return jv;
}

json envelope(const std::string& command, json inputs, json value, int digits_certified,
              const std::string& method, long long elapsed_ms) {
    json env;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["value"] = std::move(value);
    env["digits_certified"] = digits_certified;
    env["method"] = method;
    env["elapsed_ms"] = elapsed_ms;
    return env;
}

// Shared emitter for single certified values. Returns the exit code:
// 0 normally, 1 when fewer digits than requested could be certified.
int emit_value(std::ostream& out, std::ostream& err, const std::string& format,
               const std::string& command, json inputs, const std::string& method,
               const CertifiedDecimal& v, int digits, long long elapsed_ms) {
    int cd = certified_digits(v, digits);
    if (format == "json") {
        out << envelope(command, std::move(inputs), value_json(v, digits), cd, method, elapsed_ms)
                   .dump(2)
            << "\n";
    } else {
        if (cd >= 0)
            out << *render_pinned(v, cd) << "\n";
        else
            out << render_with_radius(v) << "\n";
    }
    if (cd < digits) {
        err << "error: certified only " << cd << " of " << digits
            << " requested digits (error radius exceeded budget)\n";
        return 1;
    }
    return 0;
}

EbMethod eb_method_from(const std::string& name) {
    if (name == "direct") return EbMethod::direct;
    if (name == "theta") return EbMethod::theta;
    return EbMethod::divisor;
}

int run_constant_eb(std::ostream& out, std::ostream& err, int digits, const std::string& method,
                    const std::string& format) {
    json inputs{{"digits", digits}, {"method", method}};
    auto start = Clock::now();
    if (method != "all") {
        CertifiedDecimal v = erdos_borwein(eb_method_from(method), digits);
        return emit_value(out, err, format, "constant eb", inputs, method, v, digits,
                          ms_since(start));
    }

    CertifiedDecimal direct = eb_direct(digits);
    CertifiedDecimal theta = eb_theta(digits);
    CertifiedDecimal divisor = eb_divisor(digits);
    Rational lo = std::max({direct.lower(), theta.lower(), divisor.lower()});
    Rational hi = std::min({direct.upper(), theta.upper(), divisor.upper()});
    if (lo > hi) {
        err << "internal error: method intervals do not intersect\n";
        return 1;
    }
    Rational mid = (lo + hi) / 2;
    CertifiedDecimal center = CertifiedDecimal::from_rational(mid, direct.scale());
    CertifiedDecimal inter(center.mantissa(), center.scale(), center.error() + (hi - lo) / 2);
    long long elapsed = ms_since(start);

    int cd = digits;
    for (const CertifiedDecimal* v : {&direct, &theta, &divisor, &inter})
        cd = std::min(cd, certified_digits(*v, digits));
    auto width_exp = error_exponent(hi - lo);

    if (format == "json") {
        json value;
        value["direct"] = value_json(direct, digits);
        value["theta"] = value_json(theta, digits);
        value["divisor"] = value_json(divisor, digits);
        value["intersection"] = value_json(inter, digits);
        value["intersection"]["width_exponent"] = width_exp ? json(*width_exp) : json(nullptr);
        out << envelope("constant eb", inputs, value, cd, "all", elapsed).dump(2) << "\n";
    } else {
        auto line = [&](const char* name, const CertifiedDecimal& v) {
            int d = certified_digits(v, digits);
            out << name << " " << (d >= 0 ? *render_pinned(v, d) : render_with_radius(v));
        };
        line("direct      ", direct);
        out << "\n";
        line("theta       ", theta);
        out << "\n";
        line("divisor     ", divisor);
        out << "\n";
        line("intersection", inter);
        if (width_exp) out << " (width <= 1e-" << *width_exp << ")";
        out << "\n";
    }
    if (cd < digits) {
        err << "error: certified only " << cd << " of " << digits << " requested digits\n";
        return 1;
    }
    return 0;
}

int run_series_eval(std::ostream& out, std::ostream& err, const std::string& exponents,
                    const std::string& x_text, int digits, const std::string& coeffs,
                    const std::string& format) {
    json inputs{{"exponents", exponents}, {"x", x_text}, {"digits", digits}};
    if (!coeffs.empty()) inputs["coefficients"] = coeffs;

    ExponentSequence seq = parse_exponent_spec(exponents);
    if (is_arithmetic_progression(seq, 10))
        err << "warning: exponents form an arithmetic progression; the sum is a rational "
               "function of x, not a lacunary transcendental\n";
    LacunarySeries series =
        coeffs.empty() ? LacunarySeries(seq) : LacunarySeries(seq, parse_rational_list(coeffs));
    Rational x = parse_rational(x_text);

    auto start = Clock::now();
    CertifiedDecimal v = eval_series(series, x, digits);
    return emit_value(out, err, format, "series eval", inputs, "eval_series", v, digits,
                      ms_since(start));
}

CurveSpec curve_spec_from(long a, const std::string& variant) {
    SignPattern signs =
        variant == "alt" ? SignPattern::alternating : SignPattern::uniform;
    ArgMode mode = variant == "powers" ? ArgMode::powered : ArgMode::fixed;
    return CurveSpec(Rational(a), signs, mode);
}

int run_curve_eval(std::ostream& out, std::ostream& err, long a, const std::string& x_text,
                   const std::string& variant, int digits, const std::string& format) {
    json inputs{{"a", a}, {"x", x_text}, {"variant", variant}, {"digits", digits}};
    CurveSpec spec = curve_spec_from(a, variant);
    Rational x = parse_rational(x_text);
    auto start = Clock::now();
    CertifiedDecimal v = eval_curve(spec, x, digits);
    return emit_value(out, err, format, "curve eval", inputs, "eval_curve", v, digits,
                      ms_since(start));
}

int run_curve_sample(std::ostream& out, std::ostream& err, long a, const std::string& from_text,
                     const std::string& to_text, long steps, int digits,
                     const std::string& variant, const std::string& format) {
    json inputs{{"a", a},     {"from", from_text},   {"to", to_text},
                {"steps", steps}, {"variant", variant}, {"digits", digits}};
    CurveSpec spec = curve_spec_from(a, variant);
    Rational from = parse_rational(from_text);
    Rational to = parse_rational(to_text);
    auto start = Clock::now();
    std::vector<SampleRow> rows = sample_curve(spec, from, to, steps, digits);
    long long elapsed = ms_since(start);

    if (format == "json") {
        json jrows = json::array();
        for (const SampleRow& row : rows) {
            json jr{{"x", to_string(row.x)}};
            if (row.pole_k) {
                jr["flag"] = "pole";
                jr["pole_k"] = *row.pole_k;
            } else {
                jr["flag"] = "ok";
                jr["y"] = value_json(*row.y, digits);
            }
            jrows.push_back(std::move(jr));
        }
        out << envelope("curve sample", inputs, jrows, digits, "eval_curve", elapsed).dump(2)
            << "\n";
    } else {
        out << "x,y,flag\n";
        for (const SampleRow& row : rows) {
            out << to_string(row.x) << ",";
            if (row.pole_k) {
                out << ",pole\n";
            } else {
                int cd = certified_digits(*row.y, digits);
                out << (cd >= 0 ? *render_pinned(*row.y, cd) : render_with_radius(*row.y))
                    << ",ok\n";
            }
        }
    }
    (void)err;
    return 0;
}

int run_eureka_verify(std::ostream& out, std::ostream& err, long upto,
                      const std::string& report_csv, const std::string& format) {
    json inputs{{"upto", upto}};
    if (!report_csv.empty()) inputs["report_csv"] = report_csv;
    auto start = Clock::now();
    IntPolySeries cube = cube_trigonal(static_cast<std::size_t>(upto));
    std::vector<std::size_t> failures;
    for (std::size_t i = 0; i <= cube.degree(); ++i)
        if (cube.coeff(i) == 0) failures.push_back(i);
    long long elapsed = ms_since(start);

    if (!report_csv.empty()) {
        std::ofstream csv(report_csv);
        if (!csv) {
            err << "error: cannot open '" << report_csv << "' for writing\n";
            return 1;
        }
        csv << "n,r3\n";
        for (std::size_t i = 0; i <= cube.degree(); ++i)
            csv << i << "," << cube.coeff(i).get_str() << "\n";
    }

    if (format == "json") {
        json value{{"checked", cube.degree() + 1}, {"failures", failures}};
        out << envelope("eureka verify", inputs, value, 0, "cube_trigonal", elapsed).dump(2)
            << "\n";
    } else {
        out << "checked: " << cube.degree() + 1 << "\n";
        out << "failures: " << failures.size() << "\n";
        for (std::size_t n : failures) out << "  n=" << n << " has no representation\n";
    }
    return 0;
}

int run_eureka_coeff(std::ostream& out, std::ostream& err, long n, const std::string& format) {
    json inputs{{"n", n}};
    auto start = Clock::now();
    IntPolySeries cube = cube_trigonal(static_cast<std::size_t>(n));
    const BigInt& c = cube.coeff(static_cast<std::size_t>(n));
    long long elapsed = ms_since(start);
    if (format == "json") {
        json value{{"digits", c.get_str()}, {"error_exponent", nullptr}};
        out << envelope("eureka coeff", inputs, value, 0, "cube_trigonal", elapsed).dump(2)
            << "\n";
    } else {
        out << c.get_str() << "\n";
    }
    (void)err;
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"certified evaluation of lacunary series, divisor sums, and curve families"};
    app.require_subcommand(1);

    static const std::vector<std::string> kFormats{"plain", "json"};

    // constant eb
    auto* constant = app.add_subcommand("constant", "certified classical constants");
    constant->require_subcommand(1);
    auto* eb = constant->add_subcommand("eb", "sum of 1/(2^n - 1) by independent methods");
    int eb_digits = 9;
    std::string eb_method = "all";
    std::string eb_format = "plain";
    eb->add_option("--digits", eb_digits, "decimal places to certify")
        ->required()
        ->check(CLI::Range(1, 100000));
    eb->add_option("--method", eb_method, "direct|theta|divisor|all")
        ->check(CLI::IsMember({"direct", "theta", "divisor", "all"}));
    eb->add_option("--format", eb_format)->check(CLI::IsMember(kFormats));

    // series eval
    auto* series = app.add_subcommand("series", "general lacunary series");
    series->require_subcommand(1);
    auto* seval = series->add_subcommand("eval", "evaluate sum A_n x^(alpha_n), |x| < 1");
    std::string se_exponents, se_x, se_coeffs, se_format = "plain";
    int se_digits = 0;
    seval->add_option("--exponents", se_exponents,
                      "trigonal | squares | geometric:A | polygonal:S | explicit:e0,e1,...")
        ->required();
    seval->add_option("--x", se_x, "rational abscissa, e.g. 1/10 or 0.5")->required();
    seval->add_option("--digits", se_digits)->required()->check(CLI::Range(1, 100000));
    seval->add_option("--coeffs", se_coeffs, "comma-separated rationals, zero after the list");
    seval->add_option("--format", se_format)->check(CLI::IsMember(kFormats));

    // curve eval / sample
    auto* curve = app.add_subcommand("curve", "the family sum sigma_k/(a^k + x or x^k)");
    curve->require_subcommand(1);
    auto* ceval = curve->add_subcommand("eval", "certified ordinate at x");
    long ce_a = 2;
    std::string ce_x, ce_variant = "plus", ce_format = "plain";
    int ce_digits = 0;
    ceval->add_option("--a", ce_a, "integer base, >= 2")->required()->check(CLI::Range(2l, 1000000l));
    ceval->add_option("--x", ce_x)->required();
    ceval->add_option("--variant", ce_variant)->check(CLI::IsMember({"plus", "alt", "powers"}));
    ceval->add_option("--digits", ce_digits)->required()->check(CLI::Range(1, 100000));
    ceval->add_option("--format", ce_format)->check(CLI::IsMember(kFormats));

    auto* csample = curve->add_subcommand("sample", "table of ordinates on an x grid");
    long cs_a = 2, cs_steps = 0;
    std::string cs_from, cs_to, cs_variant = "plus", cs_format = "csv";
    int cs_digits = 0;
    csample->add_option("--a", cs_a)->required()->check(CLI::Range(2l, 1000000l));
    csample->add_option("--from", cs_from)->required();
    csample->add_option("--to", cs_to)->required();
    csample->add_option("--steps", cs_steps)->required()->check(CLI::Range(2l, 10000000l));
    csample->add_option("--digits", cs_digits)->required()->check(CLI::Range(1, 100000));
    csample->add_option("--variant", cs_variant)->check(CLI::IsMember({"plus", "alt", "powers"}));
    csample->add_option("--format", cs_format)->check(CLI::IsMember({"csv", "json"}));

    // eureka verify / coeff
    auto* eureka = app.add_subcommand("eureka", "three-trigonal-number verification");
    eureka->require_subcommand(1);
    auto* everify = eureka->add_subcommand(
        "verify", "check every cube coefficient up to a bound is positive");
    long ev_upto = 0;
    std::string ev_csv, ev_format = "plain";
    everify->add_option("--upto", ev_upto)->required()->check(CLI::Range(0l, 1000000l));
    everify->add_option("--report-csv", ev_csv, "write n,r3 rows to this path");
    everify->add_option("--format", ev_format)->check(CLI::IsMember(kFormats));
    auto* ecoeff = eureka->add_subcommand("coeff", "one coefficient of the cube");
    long ec_n = 0;
    std::string ec_format = "plain";
    ecoeff->add_option("--n", ec_n)->required()->check(CLI::Range(0l, 1000000l));
    ecoeff->add_option("--format", ec_format)->check(CLI::IsMember(kFormats));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("lacuna");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eb->parsed()) return run_constant_eb(out, err, eb_digits, eb_method, eb_format);
        if (seval->parsed())
            return run_series_eval(out, err, se_exponents, se_x, se_digits, se_coeffs, se_format);
        if (ceval->parsed())
            return run_curve_eval(out, err, ce_a, ce_x, ce_variant, ce_digits, ce_format);
        if (csample->parsed())
            return run_curve_sample(out, err, cs_a, cs_from, cs_to, cs_steps, cs_digits,
                                    cs_variant, cs_format);
        if (everify->parsed()) return run_eureka_verify(out, err, ev_upto, ev_csv, ev_format);
        if (ecoeff->parsed()) return run_eureka_coeff(out, err, ec_n, ec_format);
        err << "error: no command\n";
        return 2;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DivergentInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroDenominator& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnboundedCoefficients& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lacuna
