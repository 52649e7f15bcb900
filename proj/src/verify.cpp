#include "qeuler/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "qeuler/classical.hpp"
#include "qeuler/dirichlet.hpp"
#include "qeuler/qeuler.hpp"
#include "qeuler/qzeta.hpp"

namespace qeuler::verify {

namespace {

using nlohmann::json;

struct Outcome {
    json inputs;
    bool ok = true;
    std::string lhs;
    std::string rhs;
    std::optional<Rational> exact_gap;
    std::optional<Real> real_gap;
};

using Case = std::function<Outcome()>;

Outcome compare_exact(json inputs, const Rational& lhs, const Rational& rhs)
{
    Outcome o;
    o.inputs = std::move(inputs);
    o.ok = lhs == rhs;
    o.lhs = lhs.to_string();
    o.rhs = rhs.to_string();
    o.exact_gap = abs(lhs - rhs);
    return o;
}

Outcome compare_real(json inputs, const Real& lhs, const Real& rhs, int digits)
{
    Outcome o;
    o.inputs = std::move(inputs);
    o.lhs = lhs.to_string();
    o.rhs = rhs.to_string();
    o.real_gap = distance(lhs, rhs);
    o.ok = *o.real_gap <= Real::tolerance(digits);
    return o;
}

Outcome compare_real(json inputs, const Real& lhs, const Rational& rhs, int digits)
{
    Outcome o;
    o.inputs = std::move(inputs);
    o.lhs = lhs.to_string();
    o.rhs = rhs.to_string();
    o.real_gap = distance(lhs, rhs);
    o.ok = *o.real_gap <= Real::tolerance(digits);
    return o;
}

Outcome check(json inputs, bool ok, std::string what)
{
    Outcome o;
    o.inputs = std::move(inputs);
    o.ok = ok;
    o.lhs = std::move(what);
    o.rhs = ok ? "holds" : "violated";
    o.exact_gap = Rational(ok ? 0 : 1);
    return o;
}

// Evaluates the cases on all hardware threads; results keep input order.
std::vector<Outcome> run_parallel(const std::vector<Case>& cases)
{
    std::vector<Outcome> out(cases.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(cases.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned id) {
        try {
            for (std::size_t i = next++; i < cases.size(); i = next++)
                out[i] = cases[i]();
        } catch (...) {
            errors[id] = std::current_exception();
            next = cases.size();
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(work, w);
    work(0);
    pool.clear();
    for (auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }
    return out;
}

VerificationReport summarize(std::string suite, json grid, const std::vector<Case>& cases)
{
    const auto start = std::chrono::steady_clock::now();
    const auto outcomes = run_parallel(cases);

    VerificationReport report;
    report.suite = std::move(suite);
    report.grid = std::move(grid);
    report.cases_run = outcomes.size();

    std::optional<Rational> worst_exact;
    std::optional<Real> worst_real;
    for (const auto& o : outcomes) {
        std::string deviation;
        if (o.real_gap) {
            report.exact = false;
            if (!worst_real || *worst_real < *o.real_gap)
                worst_real = *o.real_gap;
            deviation = o.real_gap->to_string(6);
        } else if (o.exact_gap) {
            if (!worst_exact || *worst_exact < *o.exact_gap)
                worst_exact = *o.exact_gap;
            deviation = o.exact_gap->is_zero() ? "exact" : o.exact_gap->to_string();
        }
        if (!o.ok)
            report.failures.push_back({o.inputs, o.lhs, o.rhs, deviation});
    }
    if (worst_real)
        report.max_deviation = worst_real->to_string(6);
    else if (worst_exact && !worst_exact->is_zero())
        report.max_deviation = worst_exact->to_string();
    else
        report.max_deviation = "exact";
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<Rational> qs_or(const SuiteOptions& o, std::vector<Rational> fallback)
{
    return o.qs.empty() ? std::move(fallback) : o.qs;
}

json q_list(const std::vector<Rational>& qs)
{
    json out = json::array();
    for (const auto& q : qs)
        out.push_back(q.to_string());
    return out;
}

Rational r(long num, long den = 1)
{
    return Rational(num, den);
}

// ---------------------------------------------------------------------------

VerificationReport thm3(const SuiteOptions& o)
{
    const unsigned max_m = o.max_m.value_or(10);
    const unsigned max_n = o.max_n.value_or(20);
    const auto qs = qs_or(o, {r(1, 3), r(1, 2), r(2, 3), r(3, 2), r(5, 2)});
    std::vector<Case> cases;
    for (const auto& qv : qs) {
        const QBase q = QBase::exact(qv);
        for (unsigned m = 1; m <= max_m; ++m) {
            for (unsigned n = 1; n <= max_n; ++n) {
                cases.emplace_back([=] {
                    return compare_exact({{"m", m}, {"n", n}, {"q", q.q().to_string()}},
                                         alt_q_power_sum_closed(m, n, q), alt_q_power_sum(m, n, q));
                });
            }
        }
    }
    return summarize("thm3", {{"m", {1, max_m}}, {"n", {1, max_n}}, {"q", q_list(qs)}}, cases);
}

VerificationReport weighted(const SuiteOptions& o)
{
    const unsigned max_m = o.max_m.value_or(10);
    const unsigned max_n = o.max_n.value_or(20);
    const auto qs = qs_or(o, {r(1, 3), r(1, 2), r(2, 3), r(3, 2), r(5, 2)});
    std::vector<Case> cases;
    for (const auto& qv : qs) {
        const QBase q = QBase::exact(qv);
        for (unsigned m = 1; m <= max_m; ++m) {
            for (unsigned n = 1; n <= max_n; ++n) {
                cases.emplace_back([=] {
                    return compare_exact({{"m", m}, {"n", n}, {"q", q.q().to_string()}},
                                         weighted_alt_q_power_sum_closed(m, n, q), weighted_alt_q_power_sum(m, n, q));
                });
            }
        }
    }
    return summarize("weighted", {{"m", {1, max_m}}, {"n", {1, max_n}}, {"q", q_list(qs)}}, cases);
}

VerificationReport thm2(const SuiteOptions& o)
{
    const unsigned max_n = o.max_n.value_or(10);
    const unsigned max_x = o.max_x.value_or(8);
    const auto qs = qs_or(o, {r(1, 3), r(1, 2), r(2, 3), r(3, 2)});
    std::vector<Case> cases;
    for (const auto& qv : qs) {
        const QBase q = QBase::exact(qv);
        for (unsigned n = 0; n <= max_n; ++n) {
            for (unsigned x = 0; x <= max_x; ++x) {
                cases.emplace_back([=] {
                    const auto qp = QPower::at(q, Rational(static_cast<long>(x)));
                    return compare_exact({{"n", n}, {"x", x}, {"q", q.q().to_string()}}, q_euler_poly(n, qp),
                                         q_euler_poly_via_numbers(n, qp));
                });
            }
        }
    }
    return summarize("thm2", {{"n", {0, max_n}}, {"x", {0, max_x}}, {"q", q_list(qs)}}, cases);
}

VerificationReport thm4(const SuiteOptions& o)
{
    const unsigned max_m = o.max_m.value_or(8);
    const unsigned max_x = o.max_x.value_or(5);
    const auto qs = qs_or(o, {r(1, 3), r(1, 2), r(2, 3)});
    const std::vector<unsigned long> fs = o.fs.empty() ? std::vector<unsigned long>{1, 3, 5} : o.fs;
    for (auto f : fs) {
        if (f == 0 || f % 2 == 0)
            throw DomainError("thm4 needs odd f, got " + std::to_string(f));
    }
    std::vector<Case> cases;
    for (const auto& qv : qs) {
        const QBase q = QBase::exact(qv);
        for (auto f : fs) {
            for (unsigned m = 0; m <= max_m; ++m) {
                for (unsigned x = 0; x <= max_x; ++x) {
                    cases.emplace_back([=] {
                        const auto at_x = QPower::at(q, Rational(static_cast<long>(x)));
                        return compare_exact({{"m", m}, {"f", f}, {"x", x}, {"q", q.q().to_string()}},
                                             distribution_lhs(m, f, x, q), q_euler_poly(m, at_x));
                    });
                }
            }
        }
    }
    return summarize("thm4", {{"m", {0, max_m}}, {"f", fs}, {"x", {0, max_x}}, {"q", q_list(qs)}}, cases);
}

VerificationReport classical_suite(const SuiteOptions& o)
{
    const unsigned max_m = o.max_m.value_or(12);
    const unsigned long max_k = o.max_k.value_or(50);
    std::vector<Case> cases;
    for (unsigned m = 1; m <= max_m; ++m) {
        for (unsigned long k = 1; k <= max_k; ++k) {
            cases.emplace_back([=] {
                return compare_exact({{"identity", "alternating"}, {"m", m}, {"k", k}},
                                     classical::alt_power_sum_closed(m, k), classical::alt_power_sum(m, k));
            });
            cases.emplace_back([=] {
                return compare_exact({{"identity", "power-sum"}, {"n", m}, {"k", k}},
                                     classical::power_sum_closed(m, k), classical::power_sum(m, k));
            });
        }
    }
    const std::vector<std::pair<unsigned, Rational>> anchors = {{1, r(-1, 2)}, {3, r(1, 4)}, {7, r(17, 8)}};
    for (const auto& [n, value] : anchors) {
        cases.emplace_back([=] {
            return compare_exact({{"identity", "euler-anchor"}, {"n", n}}, classical::euler_number(n), value);
        });
    }
    return summarize("classical", {{"m", {1, max_m}}, {"k", {1, max_k}}}, cases);
}

// |E_{n,1-eps} - E_n| shrinks with eps and stays within twice its eps = 1e-2 slope.
VerificationReport limit_suite(const SuiteOptions& o)
{
    const unsigned max_n = o.max_n.value_or(8);
    std::vector<Case> cases;
    for (unsigned n = 0; n <= max_n; ++n) {
        cases.emplace_back([=] {
            std::vector<Rational> slopes;
            std::vector<Rational> gaps;
            for (long e : {100L, 1000L, 10000L}) {
                const Rational eps(1, e);
                const Rational gap = abs(q_euler_number(n, QBase::exact(Rational(1) - eps)) - classical::euler_number(n));
                gaps.push_back(gap);
                slopes.push_back(gap / eps);
            }
            const bool monotone = gaps[1] <= gaps[0] && gaps[2] <= gaps[1];
            const bool bounded = slopes[1] <= Rational(2) * slopes[0] && slopes[2] <= Rational(2) * slopes[0];
            Outcome out = check({{"n", n}}, monotone && bounded, "gap/eps = " + slopes[2].to_string());
            out.rhs = "bound " + (Rational(2) * slopes[0]).to_string();
            return out;
        });
    }
    return summarize("limit", {{"n", {0, max_n}}, {"eps", {"1/100", "1/1000", "1/10000"}}}, cases);
}

VerificationReport zeta_suite(const SuiteOptions& o)
{
    const int digits = o.digits;
    std::vector<Case> cases;
    const std::vector<Rational> ss = {r(-3), r(-2), r(-1), r(-1, 2), r(0), r(1, 2), r(1), r(2)};
    const std::vector<Rational> xs = {r(1, 2), r(1), r(2), r(7, 2)};
    const auto dual_qs = qs_or(o, {r(1, 5), r(1, 2), r(4, 5)});
    for (const auto& q : dual_qs) {
        for (const auto& s : ss) {
            for (const auto& x : xs) {
                cases.emplace_back([=] {
                    const auto zq = ZetaQuery::make(s, x, q, digits);
                    return compare_real(
                        {{"route", "dual"}, {"s", s.to_string()}, {"x", x.to_string()}, {"q", q.to_string()}},
                        zeta(zq), zeta_euler_transform(zq), digits);
                });
            }
        }
    }
    const unsigned max_n = o.max_n.value_or(8);
    const unsigned max_x = o.max_x.value_or(5);
    const auto interp_qs = qs_or(o, {r(1, 3), r(1, 2), r(2, 3)});
    for (const auto& q : interp_qs) {
        for (unsigned n = 0; n <= max_n; ++n) {
            for (unsigned long x = 1; x <= max_x; ++x) {
                cases.emplace_back([=] {
                    const auto c = interpolate_check(n, x, q, digits);
                    return compare_real({{"route", "interpolation"}, {"n", n}, {"x", x}, {"q", q.to_string()}},
                                        c.approx, c.exact, digits);
                });
            }
        }
    }
    return summarize("zeta",
                     {{"dual", {{"s", q_list(ss)}, {"x", q_list(xs)}, {"q", q_list(dual_qs)}}},
                      {"interpolation", {{"n", {0, max_n}}, {"x", {1, max_x}}, {"q", q_list(interp_qs)}}},
                      {"precision", digits}},
                     cases);
}

VerificationReport partial_zeta_suite(const SuiteOptions& o)
{
    const int digits = o.digits;
    const unsigned max_n = o.max_n.value_or(6);
    const auto qs = qs_or(o, {r(1, 3), r(1, 2)});
    const std::vector<unsigned long> fs = o.fs.empty() ? std::vector<unsigned long>{3, 5} : o.fs;
    for (auto f : fs) {
        if (f < 3 || f % 2 == 0)
            throw DomainError("partial-zeta needs odd F >= 3, got " + std::to_string(f));
    }
    std::vector<Case> cases;
    for (const auto& q : qs) {
        for (auto f : fs) {
            for (unsigned long a = 1; a < f; ++a) {
                for (unsigned n = 1; n <= max_n; ++n) {
                    const json inputs = {{"n", n}, {"a", a}, {"F", f}, {"q", q.to_string()}};
                    cases.emplace_back([=] {
                        json in = inputs;
                        in["route"] = "continuation";
                        return compare_real(in, partial_zeta(Real(-static_cast<long>(n), digits), a, f, q, digits),
                                            partial_zeta_special_value(n, a, f, q), digits);
                    });
                    cases.emplace_back([=] {
                        json in = inputs;
                        in["route"] = "direct";
                        return compare_real(in,
                                            partial_zeta_direct(Real(-static_cast<long>(n), digits), a, f, q, digits),
                                            partial_zeta_special_value(n, a, f, q), digits);
                    });
                }
            }
        }
    }
    return summarize("partial-zeta",
                     {{"n", {1, max_n}}, {"F", fs}, {"q", q_list(qs)}, {"precision", digits}}, cases);
}

VerificationReport lfunction_suite(const SuiteOptions& o)
{
    const int digits = o.digits;
    const unsigned max_n = o.max_n.value_or(6);
    const auto qs = qs_or(o, {r(1, 3), r(1, 2)});
    const std::vector<unsigned long> moduli = o.moduli.empty() ? std::vector<unsigned long>{3, 5} : o.moduli;
    std::vector<Case> cases;
    for (auto d : moduli) {
        const auto group = characters_mod(d);
        for (std::size_t idx = 0; idx < group.size(); ++idx) {
            const DirichletCharacter chi = group.at(idx);
            for (const auto& q : qs) {
                for (unsigned n = 0; n <= max_n; ++n) {
                    const json inputs = {{"n", n}, {"modulus", d}, {"char_index", idx}, {"q", q.to_string()}};
                    cases.emplace_back([=] {
                        CyclotomicValue half = generalized_q_euler(n, chi, q);
                        half *= Rational(1, 2);
                        const ComplexReal numeric = l_function(Real(-static_cast<long>(n), digits), chi, q, digits);
                        const ComplexReal expected = to_complex(half, digits);
                        const ComplexReal gap{numeric.re - expected.re, numeric.im - expected.im};
                        Outcome out;
                        out.inputs = inputs;
                        out.inputs["route"] = "numeric";
                        out.lhs = numeric.re.to_string() + " + " + numeric.im.to_string() + "i";
                        out.rhs = expected.re.to_string() + " + " + expected.im.to_string() + "i";
                        out.real_gap = abs(gap);
                        out.ok = *out.real_gap <= Real::tolerance(digits);
                        return out;
                    });
                    cases.emplace_back([=] {
                        CyclotomicValue half = generalized_q_euler(n, chi, q);
                        half *= Rational(1, 2);
                        const CyclotomicValue special = l_function_special_value(n, chi, q);
                        json in = inputs;
                        in["route"] = "exact";
                        return check(in, special == half, "l(-n) == E_{n,chi,q}/2 in Q(zeta_" +
                                                              std::to_string(chi.order()) + ")");
                    });
                }
            }
        }
    }
    return summarize("lfunction", {{"n", {0, max_n}}, {"modulus", moduli}, {"q", q_list(qs)}, {"precision", digits}},
                     cases);
}

VerificationReport characters_suite(const SuiteOptions& o)
{
    const std::vector<unsigned long> moduli = o.moduli.empty() ? std::vector<unsigned long>{3, 5, 9, 15} : o.moduli;
    std::vector<Case> cases;
    for (auto d : moduli) {
        cases.emplace_back([=] {
            const auto group = characters_mod(d);
            bool ok = group.size() == totient(d);
            std::size_t principal = 0;
            for (const auto& chi : group.characters()) {
                principal += chi.is_principal() ? 1 : 0;
                for (unsigned long a = 0; a < d; ++a) {
                    for (unsigned long b = 0; b < d; ++b) {
                        const auto ea = chi.exponents()[a];
                        const auto eb = chi.exponents()[b];
                        const auto eab = chi.exponents()[a * b % d];
                        if (ea && eb)
                            ok = ok && eab && *eab == (*ea + *eb) % chi.order();
                        else
                            ok = ok && !eab;
                    }
                }
                // Nonprincipal: every m-th root of unity is hit equally often, so the sum is 0.
                if (!chi.is_principal()) {
                    std::vector<unsigned long> hits(chi.order(), 0);
                    for (const auto& e : chi.exponents()) {
                        if (e)
                            ++hits[*e];
                    }
                    ok = ok && std::all_of(hits.begin(), hits.end(), [&](auto h) { return h == hits[0]; });
                }
            }
            for (std::size_t i = 0; i < group.size(); ++i) {
                for (std::size_t j = 0; j < group.size(); ++j) {
                    const auto product = group.multiply(group.at(i), group.at(j));
                    ok = ok && std::find(group.characters().begin(), group.characters().end(), product) !=
                                   group.characters().end();
                }
            }
            ok = ok && principal == 1;
            return check({{"modulus", d}}, ok, std::to_string(group.size()) + " characters");
        });
    }
    return summarize("characters", {{"modulus", moduli}}, cases);
}

using SuiteFn = VerificationReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"thm2", &thm2},
        {"thm3", &thm3},
        {"thm4", &thm4},
        {"weighted", &weighted},
        {"classical", &classical_suite},
        {"limit", &limit_suite},
        {"zeta", &zeta_suite},
        {"partial-zeta", &partial_zeta_suite},
        {"lfunction", &lfunction_suite},
        {"characters", &characters_suite},
    };
    return suites;
}

void validate(const SuiteOptions& o)
{
    auto bounded = [](const auto& v, auto hi, const char* name) {
        if (v && *v > hi)
            throw DomainError(std::string(name) + " exceeds the supported maximum " + std::to_string(hi));
    };
    bounded(o.max_m, kMaxDegree, "max m");
    bounded(o.max_n, kMaxDegree, "max n");
    bounded(o.max_x, kMaxX, "max x");
    bounded(o.max_k, kMaxTerms, "max k");
    for (auto f : o.fs) {
        if (f > kMaxF)
            throw DomainError("f exceeds the supported maximum " + std::to_string(kMaxF));
    }
    for (auto d : o.moduli) {
        if (d == 0 || d % 2 == 0 || d > kMaxF)
            throw DomainError("modulus must be odd and at most " + std::to_string(kMaxF) + ", got " + std::to_string(d));
    }
    if (o.digits < kMinZetaDigits || o.digits > kMaxDigits)
        throw DomainError("precision must lie in [" + std::to_string(kMinZetaDigits) + ", " +
                          std::to_string(kMaxDigits) + "]");
    for (const auto& q : o.qs) {
        if (q.sign() <= 0 || q == Rational(1))
            throw DomainError("q must be positive and differ from 1, got " + q.to_string());
    }
}

} // namespace

json VerificationReport::to_json() const
{
    json fails = json::array();
    for (const auto& f : failures)
        fails.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"deviation", f.deviation}});
    return {
        {"suite", suite},
        {"grid", grid},
        {"cases_run", cases_run},
        {"failures", fails},
        {"passed", passed()},
        {"exact", exact},
        {"max_deviation", max_deviation},
        {"elapsed_ms", elapsed_ms},
    };
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<VerificationReport> run_suites(std::string_view name, const SuiteOptions& options)
{
    validate(options);
    std::vector<VerificationReport> out;
    for (const auto& [suite, fn] : registry()) {
        if (name == "all" || name == suite)
            out.push_back(fn(options));
    }
    if (out.empty())
        throw DomainError("unknown suite '" + std::string(name) + "'");
    return out;
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& options)
{
    auto reports = run_suites(name, options);
    if (name != "all")
        return std::move(reports.front());

    VerificationReport all;
    all.suite = "all";
    all.grid = json::object();
    for (auto& rep : reports) {
        all.grid[rep.suite] = rep.grid;
        all.cases_run += rep.cases_run;
        all.elapsed_ms += rep.elapsed_ms;
        all.exact = all.exact && rep.exact;
        for (auto& f : rep.failures) {
            f.inputs["suite"] = rep.suite;
            all.failures.push_back(std::move(f));
        }
    }
    std::optional<Rational> worst;
    for (const auto& rep : reports) {
        if (rep.max_deviation == "exact")
            continue;
        const Rational v = Rational::parse(rep.max_deviation);
        if (!worst || *worst < v) {
            worst = v;
            all.max_deviation = rep.max_deviation;
        }
    }
    return all;
}

} // namespace qeuler::verify
