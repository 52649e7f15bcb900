#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qeuler/classical.hpp"
#include "qeuler/dirichlet.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/qeuler.hpp"
#include "qeuler/qzeta.hpp"
#include "qeuler/verify.hpp"

namespace qeuler::cli {

namespace {

using nlohmann::json;

constexpr unsigned kMaxTableDegree = 200;

// What a command produces: the echoed query, ordered rows and the precision
// (an integer P, or "exact").
struct Output {
    json query = json::object();
    std::vector<std::string> columns;
    std::vector<json> rows;
    json precision = "exact";
};

struct Settings {
    std::string format = "json";
    int prec = kDefaultDigits;
    std::optional<unsigned> n;
    std::optional<unsigned> max_n;
    std::optional<unsigned> m;
    std::optional<unsigned long> k;
    std::string x;
    std::string q;
    std::vector<std::string> q_list;
    std::string s;
    std::optional<unsigned long> a;
    std::optional<unsigned long> f;
    std::vector<unsigned long> f_list;
    std::optional<unsigned long> modulus;
    std::vector<unsigned long> modulus_list;
    std::optional<std::size_t> char_index;
    std::string variant;
    std::string suite = "all";
    std::string report;
};

Rational parse_number(const std::string& text, const char* flag)
{
    if (text.empty())
        throw DomainError(std::string(flag) + " is required");
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw DomainError(std::string("cannot read ") + flag + " value '" + text + "' as a rational or decimal");
    }
}

template <class T>
T required(const std::optional<T>& v, const char* flag)
{
    if (!v)
        throw DomainError(std::string(flag) + " is required");
    return *v;
}

void check_precision(int prec)
{
    if (prec < kMinZetaDigits || prec > verify::kMaxDigits)
        throw DomainError("--prec must lie in [" + std::to_string(kMinZetaDigits) + ", " +
                          std::to_string(verify::kMaxDigits) + "]");
}

unsigned check_degree(unsigned n)
{
    if (n > kMaxTableDegree)
        throw DomainError("degree " + std::to_string(n) + " exceeds " + std::to_string(kMaxTableDegree));
    return n;
}

// Nonpositive integer s as n = -s, if any.
std::optional<unsigned> negative_integer(const Rational& s)
{
    if (!s.is_integer() || s.sign() > 0 || s < Rational(-static_cast<long>(kMaxTableDegree)))
        return std::nullopt;
    return static_cast<unsigned>(-s.num().get_si());
}

json value_or_null(const std::optional<Rational>& v)
{
    return v ? json(v->to_string()) : json(nullptr);
}

// ---------------------------------------------------------------------------

Output numbers(const Settings& st)
{
    const unsigned max_n = check_degree(required(st.max_n ? st.max_n : st.n, "--max-n"));
    const std::string variant = st.variant.empty() ? "plain" : st.variant;
    Output out;
    out.query = {{"command", "numbers"}, {"max_n", max_n}, {"variant", variant}};
    out.columns = {"n", "value"};

    std::vector<Rational> values;
    if (variant == "plain" || variant == "star") {
        const QBase q = QBase::exact(parse_number(st.q, "--q"));
        out.query["q"] = q.q().to_string();
        if (variant == "plain") {
            values = q_euler_numbers(max_n, q);
        } else {
            for (unsigned n = 0; n <= max_n; ++n)
                values.push_back(q_euler_star_number(n, q));
        }
    } else if (variant == "classical-euler") {
        values = classical::euler_numbers(max_n);
    } else {
        for (unsigned n = 0; n <= max_n; ++n)
            values.push_back(classical::bernoulli_number(n));
    }
    for (unsigned n = 0; n <= max_n; ++n)
        out.rows.push_back({{"n", n}, {"value", values[n].to_string()}});
    return out;
}

Output poly(const Settings& st)
{
    unsigned lo = 0;
    unsigned hi = 0;
    if (st.max_n) {
        hi = check_degree(*st.max_n);
    } else {
        lo = hi = check_degree(required(st.n, "--n"));
    }
    const std::string variant = st.variant.empty() ? "plain" : st.variant;
    const Rational x = parse_number(st.x, "--x");
    Output out;
    out.query = {{"command", "poly"}, {"n", {lo, hi}}, {"x", x.to_string()}, {"variant", variant}};
    out.columns = {"n", "x", "value"};

    std::function<Rational(unsigned)> eval;
    if (variant == "classical") {
        eval = [x](unsigned n) { return classical::euler_poly(n, x); };
    } else {
        const QBase q = QBase::exact(parse_number(st.q, "--q"));
        out.query["q"] = q.q().to_string();
        const QPower qp = QPower::at(q, x);
        out.query["t"] = qp.t().to_string();
        if (variant == "plain")
            eval = [qp](unsigned n) { return q_euler_poly(n, qp); };
        else
            eval = [qp](unsigned n) { return q_euler_star_poly(n, qp); };
    }
    for (unsigned n = lo; n <= hi; ++n)
        out.rows.push_back({{"n", n}, {"x", x.to_string()}, {"value", eval(n).to_string()}});
    return out;
}

Output sums(const Settings& st)
{
    const unsigned m = check_degree(required(st.m, "--m"));
    const unsigned long n = required(st.n, "--n");
    if (n > verify::kMaxTerms)
        throw DomainError("--n exceeds " + std::to_string(verify::kMaxTerms));
    const std::string variant = st.variant.empty() ? "alternating" : st.variant;
    Output out;
    out.query = {{"command", "sums"}, {"m", m}, {"n", n}, {"variant", variant}};
    out.columns = {"m", "n", "brute_force", "closed_form", "agree"};

    Rational brute;
    Rational closed;
    if (variant == "classical-alternating") {
        brute = classical::alt_power_sum(m, n);
        closed = classical::alt_power_sum_closed(m, n);
    } else if (variant == "classical-power") {
        brute = classical::power_sum(m, n);
        closed = classical::power_sum_closed(m, n);
    } else {
        const QBase q = QBase::exact(parse_number(st.q, "--q"));
        out.query["q"] = q.q().to_string();
        if (variant == "alternating") {
            brute = alt_q_power_sum(m, n, q);
            closed = alt_q_power_sum_closed(m, n, q);
        } else {
            brute = weighted_alt_q_power_sum(m, n, q);
            closed = weighted_alt_q_power_sum_closed(m, n, q);
        }
    }
    out.rows.push_back({{"m", m},
                        {"n", n},
                        {"brute_force", brute.to_string()},
                        {"closed_form", closed.to_string()},
                        {"agree", brute == closed}});
    return out;
}

Output zeta_cmd(const Settings& st)
{
    check_precision(st.prec);
    const Rational s = parse_number(st.s, "--s");
    const Rational x = parse_number(st.x, "--x");
    const Rational q = parse_number(st.q, "--q");
    const auto zq = ZetaQuery::make(s, x, q, st.prec);
    Output out;
    out.query = {{"command", "zeta"}, {"s", s.to_string()}, {"x", x.to_string()}, {"q", q.to_string()}};
    out.columns = {"s", "x", "q", "value", "exact"};
    out.precision = st.prec;

    std::optional<Rational> exact;
    if (const auto n = negative_integer(s)) {
        try {
            exact = q_euler_poly(*n, QPower::at(QBase::zeta(q), x)) / Rational(2);
        } catch (const NotExactPower&) {
        }
    }
    out.rows.push_back({{"s", s.to_string()},
                        {"x", x.to_string()},
                        {"q", q.to_string()},
                        {"value", zeta(zq).to_string()},
                        {"exact", value_or_null(exact)}});
    return out;
}

Output partial_zeta_cmd(const Settings& st)
{
    check_precision(st.prec);
    const Rational s = parse_number(st.s, "--s");
    const Rational q = parse_number(st.q, "--q");
    const unsigned long a = required(st.a, "--a");
    const unsigned long f = required(st.f, "--f");
    if (f > verify::kMaxF)
        throw DomainError("--f exceeds " + std::to_string(verify::kMaxF));
    Output out;
    out.query = {{"command", "partial-zeta"}, {"s", s.to_string()}, {"a", a}, {"F", f}, {"q", q.to_string()}};
    out.columns = {"s", "a", "F", "q", "value", "exact"};
    out.precision = st.prec;

    const Real value = partial_zeta(Real(s, st.prec), a, f, q, st.prec);
    std::optional<Rational> exact;
    if (const auto n = negative_integer(s))
        exact = partial_zeta_special_value(*n, a, f, q);
    out.rows.push_back({{"s", s.to_string()},
                        {"a", a},
                        {"F", f},
                        {"q", q.to_string()},
                        {"value", value.to_string()},
                        {"exact", value_or_null(exact)}});
    return out;
}

void check_modulus(unsigned long d)
{
    if (d > verify::kMaxF)
        throw DomainError("--modulus exceeds " + std::to_string(verify::kMaxF));
}

Output lfunction(const Settings& st)
{
    check_precision(st.prec);
    const Rational s = parse_number(st.s, "--s");
    const Rational q = parse_number(st.q, "--q");
    const unsigned long d = required(st.modulus, "--modulus");
    check_modulus(d);
    const std::size_t idx = required(st.char_index, "--char-index");
    const auto group = characters_mod(d);
    const auto& chi = group.at(idx);
    Output out;
    out.query = {{"command", "lfunction"},
                 {"s", s.to_string()},
                 {"modulus", d},
                 {"char_index", idx},
                 {"q", q.to_string()}};
    out.columns = {"s", "modulus", "char_index", "re", "im", "exact_re", "exact_im"};
    out.precision = st.prec;

    const ComplexReal value = l_function(Real(s, st.prec), chi, q, st.prec);
    std::optional<Rational> exact_re;
    std::optional<Rational> exact_im;
    if (const auto n = negative_integer(s)) {
        if (const auto g = l_function_special_value(*n, chi, q).as_gaussian()) {
            exact_re = g->first;
            exact_im = g->second;
        }
    }
    out.rows.push_back({{"s", s.to_string()},
                        {"modulus", d},
                        {"char_index", idx},
                        {"re", value.re.to_string()},
                        {"im", value.im.to_string()},
                        {"exact_re", value_or_null(exact_re)},
                        {"exact_im", value_or_null(exact_im)}});
    return out;
}

Output characters(const Settings& st)
{
    const unsigned long d = required(st.modulus, "--modulus");
    check_modulus(d);
    const auto group = characters_mod(d);
    Output out;
    out.query = {{"command", "characters"}, {"modulus", d}};
    out.columns = {"index", "index_tuple", "order", "principal", "real", "exponents"};
    for (std::size_t i = 0; i < group.size(); ++i) {
        const auto& chi = group.at(i);
        json exps = json::array();
        for (const auto& e : chi.exponents())
            exps.push_back(e ? json(*e) : json(nullptr));
        out.rows.push_back({{"index", i},
                            {"index_tuple", chi.index_tuple()},
                            {"order", chi.order()},
                            {"principal", chi.is_principal()},
                            {"real", chi.is_real()},
                            {"exponents", exps}});
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string csv_cell(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "";
    if (v.is_array()) {
        std::string joined;
        for (std::size_t i = 0; i < v.size(); ++i)
            joined += (i ? ";" : "") + (v[i].is_null() ? std::string("-") : csv_cell(v[i]));
        return joined;
    }
    return v.dump();
}

void emit(const Output& o, const std::string& format, std::ostream& out)
{
    if (format == "csv") {
        for (std::size_t i = 0; i < o.columns.size(); ++i)
            out << (i ? "," : "") << o.columns[i];
        out << ",precision\n";
        const std::string prec = csv_cell(o.precision);
        for (const auto& row : o.rows) {
            for (std::size_t i = 0; i < o.columns.size(); ++i)
                out << (i ? "," : "") << csv_cell(row.at(o.columns[i]));
            out << ',' << prec << '\n';
        }
        return;
    }
    json doc = {{"query", o.query}, {"results", o.rows}, {"precision", o.precision}};
    out << doc.dump(2) << '\n';
}

int verify_cmd(const Settings& st, std::ostream& out)
{
    verify::SuiteOptions opts;
    opts.max_m = st.m;
    opts.max_n = st.max_n ? st.max_n : st.n;
    if (!st.x.empty()) {
        const Rational x = parse_number(st.x, "--x");
        if (!x.is_integer() || x.sign() < 0 || x > Rational(static_cast<long>(verify::kMaxX)))
            throw DomainError("--x must be an integer bound in [0, " + std::to_string(verify::kMaxX) + "]");
        opts.max_x = static_cast<unsigned>(x.num().get_ui());
    }
    opts.max_k = st.k;
    for (const auto& q : st.q_list)
        opts.qs.push_back(parse_number(q, "--q"));
    opts.fs = st.f_list;
    opts.moduli = st.modulus_list;
    opts.digits = st.prec;

    const auto report = verify::run_suite(st.suite, opts);
    const json report_json = report.to_json();
    if (!st.report.empty()) {
        std::ofstream file(st.report);
        if (!file || !(file << report_json.dump(2) << '\n'))
            throw DomainError("cannot write report to '" + st.report + "'");
    }

    Output o;
    o.query = {{"command", "verify"}, {"suite", st.suite}};
    o.columns = {"suite", "cases_run", "failures", "passed", "exact", "max_deviation", "elapsed_ms"};
    o.precision = report.exact ? json("exact") : json(st.prec);
    if (st.format == "csv") {
        json row = report_json;
        row["failures"] = report.failures.size();
        o.rows.push_back(row);
    } else {
        o.rows.push_back(report_json);
    }
    emit(o, st.format, out);
    return report.passed() ? kOk : kVerifyFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Settings st;
    CLI::App app{"Modified q-Euler numbers and polynomials, q-zeta functions and Dirichlet q-L-functions", "qeuler"};
    app.require_subcommand(1);
    app.add_option("--format", st.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", st.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };
    auto prec_opt = [&](CLI::App* sub) {
        sub->add_option("--prec", st.prec, "Significant decimal digits")->capture_default_str();
    };

    auto* numbers_cmd = app.add_subcommand("numbers", "Table of q-Euler, star, Euler or Bernoulli numbers");
    numbers_cmd->add_option("--max-n,--n", st.max_n, "Largest index");
    numbers_cmd->add_option("--q", st.q, "q as p/q or decimal");
    numbers_cmd->add_option("--variant", st.variant)
        ->check(CLI::IsMember({"plain", "star", "classical-euler", "classical-bernoulli"}));
    format_opt(numbers_cmd);

    auto* poly_cmd = app.add_subcommand("poly", "q-Euler polynomial values");
    poly_cmd->add_option("--n", st.n, "Degree");
    poly_cmd->add_option("--max-n", st.max_n, "Tabulate degrees 0..max-n");
    poly_cmd->add_option("--x", st.x, "Argument (rational; q^x must be rational)");
    poly_cmd->add_option("--q", st.q, "q as p/q or decimal");
    poly_cmd->add_option("--variant", st.variant)->check(CLI::IsMember({"plain", "star", "classical"}));
    format_opt(poly_cmd);

    auto* sums_cmd = app.add_subcommand("sums", "Power sums, brute force against closed form");
    sums_cmd->add_option("--m", st.m, "Exponent");
    sums_cmd->add_option("--n", st.n, "Number of terms");
    sums_cmd->add_option("--q", st.q, "q as p/q or decimal");
    sums_cmd->add_option("--variant", st.variant)
        ->check(CLI::IsMember({"alternating", "weighted", "classical-alternating", "classical-power"}));
    format_opt(sums_cmd);

    auto* zeta_sub = app.add_subcommand("zeta", "Euler q-zeta function");
    zeta_sub->add_option("--s", st.s, "s (rational or decimal)");
    zeta_sub->add_option("--x", st.x, "x > 0");
    zeta_sub->add_option("--q", st.q, "0 < q < 1");
    prec_opt(zeta_sub);
    format_opt(zeta_sub);

    auto* partial_sub = app.add_subcommand("partial-zeta", "Partial q-zeta function H_q(s, a; F)");
    partial_sub->add_option("--s", st.s, "s (rational or decimal)");
    partial_sub->add_option("--a", st.a, "Residue 0 < a < F");
    partial_sub->add_option("--f", st.f, "Odd modulus F >= 3");
    partial_sub->add_option("--q", st.q, "0 < q < 1");
    prec_opt(partial_sub);
    format_opt(partial_sub);

    auto* lfunction_sub = app.add_subcommand("lfunction", "q-L-function of a Dirichlet character");
    lfunction_sub->add_option("--s", st.s, "s (rational or decimal)");
    lfunction_sub->add_option("--modulus", st.modulus, "Odd modulus d");
    lfunction_sub->add_option("--char-index", st.char_index, "Character index, 0 is principal");
    lfunction_sub->add_option("--q", st.q, "0 < q < 1");
    prec_opt(lfunction_sub);
    format_opt(lfunction_sub);

    auto* characters_sub = app.add_subcommand("characters", "Dirichlet characters modulo an odd d");
    characters_sub->add_option("--modulus", st.modulus, "Odd modulus d");
    format_opt(characters_sub);

    auto* verify_sub = app.add_subcommand("verify", "Run identity verification suites");
    std::vector<std::string> suites = verify::suite_names();
    suites.push_back("all");
    verify_sub->add_option("--suite", st.suite)->check(CLI::IsMember(suites))->capture_default_str();
    verify_sub->add_option("--m", st.m, "Largest m");
    verify_sub->add_option("--n,--max-n", st.max_n, "Largest n");
    verify_sub->add_option("--x", st.x, "Largest x");
    verify_sub->add_option("--k", st.k, "Largest k (classical suite)");
    verify_sub->add_option("--q", st.q_list, "q values, comma separated")->delimiter(',');
    verify_sub->add_option("--f", st.f_list, "f values, comma separated")->delimiter(',');
    verify_sub->add_option("--modulus", st.modulus_list, "Moduli, comma separated")->delimiter(',');
    verify_sub->add_option("--report", st.report, "Write the JSON report to this path");
    prec_opt(verify_sub);
    format_opt(verify_sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (verify_sub->parsed())
            return verify_cmd(st, out);
        Output o;
        if (numbers_cmd->parsed())
            o = numbers(st);
        else if (poly_cmd->parsed())
            o = poly(st);
        else if (sums_cmd->parsed())
            o = sums(st);
        else if (zeta_sub->parsed())
            o = zeta_cmd(st);
        else if (partial_sub->parsed())
            o = partial_zeta_cmd(st);
        else if (lfunction_sub->parsed())
            o = lfunction(st);
        else
            o = characters(st);
        // Render fully before writing so errors never leave partial output.
        std::ostringstream buffer;
        emit(o, st.format, buffer);
        out << buffer.str();
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace qeuler::cli
