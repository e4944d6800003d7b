#include "betajack/verify_suites.hpp"

#include <algorithm>
#include <sstream>

#include "betajack/cs_operator.hpp"
#include "betajack/factorization.hpp"
#include "betajack/maps.hpp"
#include "betajack/parallel.hpp"

namespace betajack {

bool SuiteResult::pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

int SuiteResult::failures() const {
    return static_cast<int>(
        std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

std::string SuiteResult::summary() const {
    std::ostringstream os;
    os << name << ": " << (cases.size() - static_cast<std::size_t>(failures())) << "/"
       << cases.size() << " cases pass";
    return os.str();
}

namespace {

std::vector<Partition> partitions_up_to(int max_size, int min_size = 0) {
    std::vector<Partition> out;
    for (int k = min_size; k <= max_size; ++k)
        for (auto& p : partitions_of(k)) out.push_back(std::move(p));
    return out;
}

CaseResult make_case(std::string name, bool pass, std::string detail = {}) {
    return CaseResult{std::move(name), pass, std::move(detail), nullptr};
}

int bound(const SuiteOptions& opt, int dflt) { return opt.max_size >= 0 ? opt.max_size : dflt; }

}  // namespace

SuiteResult suite_jack(JackCache& cache, const SuiteOptions& opt) {
    SuiteResult suite{"jack", {}};
    const int max_size = bound(opt, 5);
    const Ctx& ctx = cache.alpha_ctx();
    const Scalar alpha = Scalar::variable(ctx, "alpha");

    for (int d = 0; d <= max_size; ++d) {
        const auto parts = partitions_of(d);
        bool orth = true, norm = true, tri = true, special = true;
        std::string detail;
        for (const auto& la : parts) {
            auto p_la = cache.jack_symbolic(la);
            for (const auto& mu : parts) {
                if (mu == la) continue;
                if (!hall_inner(*p_la, *cache.jack_symbolic(mu), alpha).is_zero()) {
                    orth = false;
                    detail = "<P_" + la.str() + ", P_" + mu.str() + "> != 0";
                }
            }
            auto [h, hp] = hook_products(la, alpha);
            if (!(hall_inner(*p_la, *p_la, alpha) == hp / h)) {
                norm = false;
                detail = "norm of P_" + la.str() + " != h'/h";
            }
            auto mexp = to_monomial_basis(*p_la);
            for (const auto& [mu, c] : mexp) {
                if (mu == la) {
                    if (!c.is_one()) tri = false;
                } else if (!dominance_leq(mu, la)) {
                    tri = false;
                }
            }
            if (!tri && detail.empty()) detail = "triangularity fails for P_" + la.str();
            if (!(exponential_specialization(*p_la) == h.inverse())) {
                special = false;
                detail = "P_" + la.str() + "(1,0,0,...) != 1/h";
            }
        }
        suite.cases.push_back(make_case("orthogonality |lambda| = " + std::to_string(d), orth));
        suite.cases.push_back(make_case("norm = h'/h |lambda| = " + std::to_string(d), norm));
        suite.cases.push_back(
            make_case("monomial triangularity |lambda| = " + std::to_string(d), tri, detail));
        suite.cases.push_back(
            make_case("P(1,0,0,...) = 1/h |lambda| = " + std::to_string(d), special));
    }
    return suite;
}

namespace {

SuiteResult theorem_suite(JackCache& cache, EnsembleKind kind, const SuiteOptions& opt) {
    SuiteResult suite{kind == EnsembleKind::jacobi ? "jacobi" : "laguerre", {}};
    const int max_size = bound(opt, 4);

    struct Job {
        Partition lambda;
        Sign sign;
        std::optional<Rational> beta;
    };
    std::vector<Job> jobs;
    const std::vector<Rational> betas{Rational(1), Rational(2), Rational(4)};
    for (const auto& beta : betas)
        for (const auto& lambda : partitions_up_to(max_size, 1))
            for (Sign sign : {Sign::plus, Sign::minus}) jobs.push_back({lambda, sign, beta});
    // symbolic beta kept to small sizes
    for (const auto& lambda : partitions_up_to(std::min(max_size, 2), 1))
        for (Sign sign : {Sign::plus, Sign::minus}) jobs.push_back({lambda, sign, std::nullopt});

    std::vector<CaseResult> results(jobs.size());
    parallel_for(jobs.size(), opt.threads, [&](std::size_t i) {
        const Job& job = jobs[i];
        std::string name = suite.name + (job.sign == Sign::plus ? "+" : "-") + " lambda=(" +
                           job.lambda.str() + ") beta=" +
                           (job.beta ? rat_str(*job.beta) : "symbolic");
        try {
            auto report = std::make_shared<ExpansionReport>(
                verify_expansion(cache, job.lambda, kind, job.sign, job.beta, opt.order));
            std::string detail;
            if (!report->pass) {
                const auto& row = report->orders[static_cast<std::size_t>(report->first_mismatch)];
                detail = "mismatch at r=" + std::to_string(row.r) + ": lhs=" + row.lhs.str() +
                         " rhs=" + row.rhs.str();
            }
            results[i] = make_case(std::move(name), report->pass, std::move(detail));
            results[i].expansion = std::move(report);
        } catch (const Error& e) {
            results[i] = make_case(std::move(name), false, e.what());
        }
    });
    suite.cases = std::move(results);

    // The lambda = (1), sign + case must collapse to the constant beta/2.
    for (const auto& beta : betas) {
        const auto report =
            verify_expansion(cache, Partition{1}, kind, Sign::plus, beta, opt.order);
        const Rational half_beta = beta / 2;
        bool ok = report.pass;
        for (const auto& row : report.orders) {
            const bool zero_order = (row.r == 0);
            ok = ok && row.lhs.is_rational() && row.rhs.is_rational() &&
                 row.lhs.as_rational() == (zero_order ? half_beta : Rational(0)) &&
                 row.rhs.as_rational() == (zero_order ? half_beta : Rational(0));
        }
        suite.cases.push_back(make_case(
            "identity case lambda=(1)+ equals beta/2, beta=" + rat_str(beta), ok));
    }
    return suite;
}

}  // namespace

SuiteResult suite_jacobi(JackCache& cache, const SuiteOptions& opt) {
    return theorem_suite(cache, EnsembleKind::jacobi, opt);
}

SuiteResult suite_laguerre(JackCache& cache, const SuiteOptions& opt) {
    return theorem_suite(cache, EnsembleKind::laguerre, opt);
}

SuiteResult suite_cross_pipeline(JackCache& cache, const SuiteOptions& opt) {
    SuiteResult suite{"cross-pipeline", {}};
    const int N = bound(opt, 5);
    const int R = std::min(opt.order, 5) < 0 ? 5 : std::min(opt.order, 5);

    const std::vector<std::pair<int, int>> shapes{{1, 0}, {0, 1}, {2, 1}, {1, 1}};
    std::vector<CaseResult> results(shapes.size());
    parallel_for(shapes.size(), opt.threads, [&](std::size_t i) {
        const auto [L, M] = shapes[i];
        std::vector<std::string> names{"b"};
        for (int j = 1; j <= L + M; ++j) names.push_back("u" + std::to_string(j));
        Ctx ctx = make_context(std::move(names));
        const Scalar b = Scalar::variable(ctx, "b");
        std::vector<Scalar> u;
        for (int j = 1; j <= L + M; ++j) u.push_back(Scalar::variable(ctx, "u" + std::to_string(j)));
        const WeightGF G = custom_weight(ctx, L, M, std::move(u));

        const HurwitzTable jack_side = hurwitz_table(G, b, N, R, cache);
        const HurwitzTable map_side = t_table(G, b, N, R);
        bool ok = jack_side.entries.size() == map_side.entries.size();
        std::string detail;
        if (ok) {
            for (const auto& [key, value] : jack_side.entries) {
                if (!(map_side.at(key.first, key.second) == value)) {
                    ok = false;
                    detail = "entry (" + key.first.str() + "; " + std::to_string(key.second) +
                             ") differs";
                    break;
                }
            }
        }
        results[i] = make_case("jack-expansion == lambda-recursion, (L,M)=(" +
                                   std::to_string(L) + "," + std::to_string(M) +
                                   "), symbolic b and u",
                               ok, detail);
    });
    suite.cases = std::move(results);
    return suite;
}

SuiteResult suite_b0_oracle(JackCache& cache, const SuiteOptions& opt) {
    SuiteResult suite{"b0-oracle", {}};
    const int N = bound(opt, 4);
    const int R = std::min(opt.order, 4) < 0 ? 4 : std::min(opt.order, 4);

    const std::vector<std::pair<int, int>> shapes{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    for (const auto& [L, M] : shapes) {
        std::vector<std::string> names;
        for (int j = 1; j <= L + M; ++j) names.push_back("u" + std::to_string(j));
        Ctx ctx = make_context(std::move(names));
        const Scalar b0 = Scalar::zero(ctx);
        std::vector<Scalar> u;
        for (int j = 1; j <= L + M; ++j) u.push_back(Scalar::variable(ctx, "u" + std::to_string(j)));
        const WeightGF G = custom_weight(ctx, L, M, std::move(u));
        const std::string shape = "(L,M)=(" + std::to_string(L) + "," + std::to_string(M) + ")";

        const HurwitzTable jack_side = hurwitz_table(G, b0, N, R, cache);
        const HurwitzTable map_side = t_table(G, b0, N, R);

        bool tables_equal = true;
        for (const auto& [key, value] : jack_side.entries)
            tables_equal = tables_equal && map_side.at(key.first, key.second) == value;
        suite.cases.push_back(make_case("b=0 tables agree " + shape, tables_equal));

        bool fact_ok = true;
        std::string detail;
        for (const auto& [key, value] : jack_side.entries) {
            const auto& [lambda, r] = key;
            if (lambda.empty()) continue;
            const Scalar oracle = colored_monotone_factorization_sum(lambda, r, G) *
                                  (Rational(1) / factorial(lambda.weight()));
            if (!(oracle == value)) {
                fact_ok = false;
                detail = "(" + lambda.str() + "; " + std::to_string(r) + ")";
                break;
            }
        }
        suite.cases.push_back(
            make_case("b=0 table = factorization counts / |lambda|! " + shape, fact_ok, detail));

        bool jm_ok = true;
        for (int n = 1; n <= N; ++n) {
            const auto jm = jm_class_expansion(G, n, R);
            for (const auto& [key, value] : jm)
                jm_ok = jm_ok && jack_side.at(key.first, key.second) == value;
        }
        suite.cases.push_back(make_case("b=0 table = JM class expansion " + shape, jm_ok));
    }

    // Pinned values at u = 1 for the stated weights.
    {
        Ctx ctx = make_context({});
        const Scalar b0 = Scalar::zero(ctx);
        const Scalar one = Scalar::one(ctx);
        const WeightGF lin = custom_weight(ctx, 1, 0, {one});    // G(z) = 1 + z
        const WeightGF geo = custom_weight(ctx, 0, 1, {one});    // G(z) = 1/(1-z)
        const HurwitzTable tl = hurwitz_table(lin, b0, 3, 2, cache);
        const HurwitzTable tg = hurwitz_table(geo, b0, 3, 2, cache);
        suite.cases.push_back(make_case(
            "pinned H((2);1) = 1/2 for G=1+z",
            tl.at(Partition{2}, 1) == Scalar(ctx, Rational(1, 2))));
        suite.cases.push_back(make_case("pinned H((1,1);1) = 0 for G=1+z",
                                        tl.at(Partition{1, 1}, 1).is_zero()));
        suite.cases.push_back(make_case(
            "pinned H((3);2) = 2/3 for G=1/(1-z)",
            tg.at(Partition{3}, 2) == Scalar(ctx, Rational(2, 3))));
    }
    return suite;
}

SuiteResult suite_appendix(const SuiteOptions& opt) {
    SuiteResult suite{"appendix", {}};
    const int max_size = bound(opt, 6);
    const int max_n = 7;
    Ctx ctx = make_context({"beta"});
    const Scalar beta = Scalar::variable(ctx, "beta");
    for (const auto& lambda : partitions_up_to(max_size)) {
        bool ok = true;
        for (int n = std::max(lambda.length(), 1); n <= max_n; ++n)
            ok = ok && appendix_identity_check(lambda, n, beta);
        suite.cases.push_back(
            make_case("appendix identity lambda=(" + lambda.str() + "), n up to " +
                          std::to_string(max_n) + ", symbolic beta",
                      ok));
    }
    return suite;
}

SuiteResult suite_inverse_lemma(JackCache& cache, const SuiteOptions& opt) {
    SuiteResult suite{"inverse-lemma", {}};
    const int max_size = bound(opt, 3);
    const int max_n = 3;

    // deterministic nonzero rational sample points
    unsigned long state = 0x2545F4914F6CDD1Dull;
    auto next_rational = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const long num = static_cast<long>((state >> 33) % 17) - 8;
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const long den = static_cast<long>((state >> 33) % 7) + 1;
        return num == 0 ? rat(1, den) : rat(num, den);
    };

    for (const auto& lambda : partitions_up_to(max_size, 1)) {
        for (int n = lambda.length(); n <= max_n; ++n) {
            bool ok = true;
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<Rational> sample;
                for (int i = 0; i < n; ++i) sample.push_back(next_rational());
                ok = ok && verify_inverse_identity(cache, lambda, n, sample);
            }
            suite.cases.push_back(make_case("inverse identity lambda=(" + lambda.str() +
                                                "), n=" + std::to_string(n) + ", 5 samples",
                                            ok));
            bool eig_ok = true;
            std::string detail;
            try {
                cs_apply(cache, lambda, n);
            } catch (const Error& e) {
                eig_ok = false;
                detail = e.what();
            }
            suite.cases.push_back(make_case("CS eigen-relation lambda=(" + lambda.str() +
                                                "), n=" + std::to_string(n),
                                            eig_ok, detail));
        }
    }
    return suite;
}

SuiteResult suite_moments(JackCache& cache, const SuiteOptions& opt) {
    (void)opt;
    SuiteResult suite{"moments", {}};
    Ctx ctx = make_context({"c", "d"});
    const Scalar c = Scalar::variable(ctx, "c");
    const Scalar d = Scalar::variable(ctx, "d");
    const Scalar one = Scalar::one(ctx);
    const JacobiParams params{one, Scalar(ctx, Rational(2)), c, d};

    auto beta_moment = [&](int k) {  // E[x^k] under Beta(c, d)
        Scalar m = one;
        if (k >= 0) {
            for (int j = 0; j < k; ++j)
                m *= (c + Scalar(ctx, Rational(j))) / (c + d + Scalar(ctx, Rational(j)));
        } else {
            for (int j = 1; j <= -k; ++j)
                m *= (c + d - Scalar(ctx, Rational(j))) / (c - Scalar(ctx, Rational(j)));
        }
        return m;
    };
    auto gamma_moment = [&](int k) {  // E[y^k] under Gamma(c)
        Scalar m = one;
        if (k >= 0)
            for (int j = 0; j < k; ++j) m *= c + Scalar(ctx, Rational(j));
        else
            for (int j = 1; j <= -k; ++j) m /= c - Scalar(ctx, Rational(j));
        return m;
    };

    for (int k = -3; k <= 3; ++k) {
        const Partition lambda = k == 0 ? Partition() : Partition{std::abs(k)};
        const Sign sign = k >= 0 ? Sign::plus : Sign::minus;
        const Scalar got = correlator(cache, lambda, sign, params);
        suite.cases.push_back(make_case("Jacobi n=1, beta=2: moment k=" + std::to_string(k),
                                        got == beta_moment(k)));
    }
    for (int k = -3; k <= 3; ++k) {
        const Partition lambda = k == 0 ? Partition() : Partition{std::abs(k)};
        const Sign sign = k >= 0 ? Sign::plus : Sign::minus;
        const Scalar got =
            laguerre_correlator(cache, lambda, sign, one, Scalar(ctx, Rational(2)), c);
        suite.cases.push_back(make_case("Laguerre n=1, beta=2: moment k=" + std::to_string(k),
                                        got == gamma_moment(k)));
    }
    return suite;
}

SuiteResult suite_f_forms(const SuiteOptions& opt) {
    SuiteResult suite{"f-forms", {}};
    const int max_size = bound(opt, 5);
    const int max_n = 6;
    Ctx ctx = make_context({"beta", "c", "d"});
    const Scalar beta = Scalar::variable(ctx, "beta");
    const Scalar c = Scalar::variable(ctx, "c");
    const Scalar d = Scalar::variable(ctx, "d");

    for (const auto& lambda : partitions_up_to(max_size, 1)) {
        bool ok = true;
        std::string detail;
        for (int n = std::max(lambda.length(), 1); n <= max_n && ok; ++n) {
            const JacobiParams p{Scalar(ctx, Rational(n)), beta, c, d};
            for (Sign sign : {Sign::plus, Sign::minus}) {
                if (!(f_coefficient(lambda, sign, p) ==
                      f_pochhammer_form(lambda, sign, n, beta, c, d))) {
                    ok = false;
                    detail = "n=" + std::to_string(n) +
                             (sign == Sign::plus ? ", sign +" : ", sign -");
                }
            }
        }
        suite.cases.push_back(make_case(
            "f content form = Pochhammer form, lambda=(" + lambda.str() + ")", ok, detail));
    }
    return suite;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "jack",     "jacobi",        "laguerre", "cross-pipeline", "b0-oracle",
        "appendix", "inverse-lemma", "moments",  "f-forms"};
    return names;
}

std::vector<SuiteResult> run_suites(const std::string& selector, JackCache& cache,
                                    const SuiteOptions& opt) {
    auto run_one = [&](const std::string& name) -> SuiteResult {
        if (name == "jack") return suite_jack(cache, opt);
        if (name == "jacobi") return suite_jacobi(cache, opt);
        if (name == "laguerre") return suite_laguerre(cache, opt);
        if (name == "cross-pipeline") return suite_cross_pipeline(cache, opt);
        if (name == "b0-oracle") return suite_b0_oracle(cache, opt);
        if (name == "appendix") return suite_appendix(opt);
        if (name == "inverse-lemma") return suite_inverse_lemma(cache, opt);
        if (name == "moments") return suite_moments(cache, opt);
        if (name == "f-forms") return suite_f_forms(opt);
        throw Error("unknown suite: " + name);
    };
    std::vector<SuiteResult> out;
    if (selector == "all") {
        for (const auto& name : suite_names()) out.push_back(run_one(name));
    } else {
        out.push_back(run_one(selector));
    }
    return out;
}

}  // namespace betajack
