#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "betajack/cs_operator.hpp"
#include "betajack/factorization.hpp"
#include "betajack/json_io.hpp"
#include "betajack/maps.hpp"
#include "betajack/parallel.hpp"
#include "betajack/verify_suites.hpp"

namespace {

using namespace betajack;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputational = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file " + path);
    out << text;
}

bool is_sym(const std::string& v) { return v == "sym" || v == "symbolic"; }

// Parses "custom(L,M,u1,...)"; u entries are expressions over the table
// context (so "u1" names stay symbolic and "1/2" is a constant).
struct CustomWeightSpec {
    int L = 0, M = 0;
    std::vector<std::string> u_text;
};

CustomWeightSpec parse_custom_weight(const std::string& text) {
    const auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')')
        throw UsageError("custom weight syntax: custom(L,M,u1,...)");
    std::vector<std::string> fields;
    std::string body = text.substr(open + 1, text.size() - open - 2);
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || (body[i] == ',' && depth == 0)) {
            fields.push_back(body.substr(start, i - start));
            start = i + 1;
        } else if (body[i] == '(') {
            ++depth;
        } else if (body[i] == ')') {
            --depth;
        }
    }
    if (fields.size() < 2) throw UsageError("custom weight needs at least L and M");
    CustomWeightSpec spec;
    try {
        spec.L = std::stoi(fields[0]);
        spec.M = std::stoi(fields[1]);
    } catch (const std::exception&) {
        throw UsageError("custom weight: L and M must be integers");
    }
    spec.u_text.assign(fields.begin() + 2, fields.end());
    if (static_cast<int>(spec.u_text.size()) != spec.L + spec.M)
        throw UsageError("custom weight: expected " + std::to_string(spec.L + spec.M) +
                         " u parameters");
    return spec;
}

int cmd_jack(const std::string& lambda_text, const std::string& alpha_text,
             const std::string& format, const std::string& output) {
    JackCache cache;
    const Partition lambda = Partition::parse(lambda_text);
    SymmetricFunction result = [&] {
        if (is_sym(alpha_text)) {
            return SymmetricFunction(*cache.jack_symbolic(lambda));
        }
        Ctx ctx = make_context({});
        return cache.jack(lambda, Scalar(ctx, rat_parse(alpha_text)));
    }();
    if (format == "json") {
        Json j;
        j["lambda"] = lambda.str();
        j["alpha"] = is_sym(alpha_text) ? "symbolic" : alpha_text;
        Json terms = Json::array();
        for (const auto& [mu, c] : result.terms()) {
            Json t;
            t["p"] = mu.str();
            t["coefficient"] = c.str();
            terms.push_back(std::move(t));
        }
        j["terms"] = std::move(terms);
        write_output(output, j.dump(2));
    } else {
        write_output(output, result.str());
    }
    return kExitPass;
}

struct HurwitzArgs {
    std::string weight;
    int N = 0, R = 0;
    std::string b_text = "sym";
    std::string beta_text;
    std::string gamma_text = "sym";
    std::string delta_text = "sym";
    std::string pipeline = "jack";
    std::string format = "json";
    std::string output;
    int threads = 1;
};

int cmd_hurwitz(const HurwitzArgs& args) {
    if (!args.beta_text.empty() && args.b_text != "sym")
        throw UsageError("give either --b or --beta, not both");

    // Assemble the context from whichever parameters stay symbolic.
    std::vector<std::string> names;
    const bool use_beta = !args.beta_text.empty();
    const bool custom = args.weight.rfind("custom", 0) == 0;
    CustomWeightSpec spec;
    if (use_beta) {
        if (is_sym(args.beta_text)) names.push_back("beta");
    } else if (is_sym(args.b_text)) {
        names.push_back("b");
    }
    if (custom) {
        spec = parse_custom_weight(args.weight);
        for (int i = 1; i <= spec.L + spec.M; ++i) names.push_back("u" + std::to_string(i));
    } else {
        if (is_sym(args.gamma_text)) names.push_back("gamma");
        if (is_sym(args.delta_text)) names.push_back("delta");
    }
    Ctx ctx = make_context(names);

    const Scalar b = [&] {
        if (use_beta) {
            Scalar beta = is_sym(args.beta_text) ? Scalar::variable(ctx, "beta")
                                                 : Scalar(ctx, rat_parse(args.beta_text));
            return Scalar(ctx, Rational(2)) / beta - Scalar::one(ctx);
        }
        return is_sym(args.b_text) ? Scalar::variable(ctx, "b")
                                   : Scalar(ctx, rat_parse(args.b_text));
    }();

    const WeightGF G = [&] {
        if (custom) {
            std::vector<Scalar> u;
            for (const auto& text : spec.u_text) u.push_back(parse_scalar(ctx, text));
            return custom_weight(ctx, spec.L, spec.M, std::move(u));
        }
        const Scalar gamma = is_sym(args.gamma_text) ? Scalar::variable(ctx, "gamma")
                                                     : Scalar(ctx, rat_parse(args.gamma_text));
        const Scalar delta = is_sym(args.delta_text) ? Scalar::variable(ctx, "delta")
                                                     : Scalar(ctx, rat_parse(args.delta_text));
        if (args.weight == "jacobi+") return make_weight(WeightKind::jacobi_plus, gamma, delta);
        if (args.weight == "jacobi-") return make_weight(WeightKind::jacobi_minus, gamma, delta);
        if (args.weight == "laguerre+") return make_weight(WeightKind::laguerre_plus, gamma, delta);
        if (args.weight == "laguerre-")
            return make_weight(WeightKind::laguerre_minus, gamma, delta);
        throw UsageError("unknown weight " + args.weight);
    }();

    JackCache cache;
    HurwitzTable table = [&] {
        if (args.pipeline == "jack") return hurwitz_table(G, b, args.N, args.R, cache, args.threads);
        if (args.pipeline == "lambda") return t_table(G, b, args.N, args.R);
        if (args.pipeline == "factorization") {
            if (!b.is_rational() || b.as_rational() != 0)
                throw UsageError("--pipeline factorization needs --b 0 (orientable case)");
            HurwitzTable t{G, b, args.N, args.R, "factorization", {}};
            for (int k = 0; k <= args.N; ++k) {
                for (const auto& lambda : partitions_of(k)) {
                    const Rational inv_fact = Rational(1) / factorial(k);
                    for (int r = 0; r <= args.R; ++r) {
                        Scalar v = lambda.empty()
                                       ? Scalar(ctx, r == 0 ? Rational(1) : Rational(0))
                                       : colored_monotone_factorization_sum(lambda, r, G) * inv_fact;
                        t.entries.emplace(std::make_pair(lambda, r), std::move(v));
                    }
                }
            }
            return t;
        }
        throw UsageError("unknown pipeline " + args.pipeline);
    }();

    if (args.format == "csv")
        write_output(args.output, table_to_csv(table));
    else
        write_output(args.output, table_to_json(table).dump(2));
    return kExitPass;
}

struct CorrelatorArgs {
    std::string ensemble = "jacobi";
    std::string sign = "+";
    std::string lambda;
    std::string n = "sym", beta = "sym", c = "sym", d = "sym";
    std::string format = "text";
    std::string output;
};

int cmd_correlator(const CorrelatorArgs& args) {
    const Partition lambda = Partition::parse(args.lambda);
    const Sign sign = args.sign == "-" ? Sign::minus : Sign::plus;
    const bool laguerre = args.ensemble == "laguerre";
    if (laguerre && args.d != "sym")
        throw UsageError("--d does not apply to the Laguerre ensemble");

    std::vector<std::string> names;
    auto declare = [&](const char* name, const std::string& v) {
        if (is_sym(v)) names.push_back(name);
    };
    declare("n", args.n);
    declare("beta", args.beta);
    declare("c", args.c);
    if (!laguerre) declare("d", args.d);
    Ctx ctx = make_context(names);
    auto value_of = [&](const char* name, const std::string& v) {
        return is_sym(v) ? Scalar::variable(ctx, name) : Scalar(ctx, rat_parse(v));
    };

    JackCache cache;
    Scalar result(ctx);
    if (laguerre) {
        result = laguerre_correlator(cache, lambda, sign, value_of("n", args.n),
                                     value_of("beta", args.beta), value_of("c", args.c));
    } else {
        JacobiParams p{value_of("n", args.n), value_of("beta", args.beta),
                       value_of("c", args.c), value_of("d", args.d)};
        result = correlator(cache, lambda, sign, p);
    }

    if (args.format == "json") {
        Json j;
        j["ensemble"] = args.ensemble;
        j["sign"] = args.sign;
        j["lambda"] = lambda.str();
        j["n"] = args.n;
        j["beta"] = args.beta;
        j["c"] = args.c;
        if (!laguerre) j["d"] = args.d;
        j["value"] = result.str();
        write_output(args.output, j.dump(2));
    } else {
        write_output(args.output, result.str());
    }
    return kExitPass;
}

int cmd_verify(const std::string& suite, int order, int max_size, int threads,
               const std::string& output) {
    JackCache cache;
    SuiteOptions opt;
    opt.order = order;
    opt.max_size = max_size;
    opt.threads = threads;
    const auto results = run_suites(suite, cache, opt);

    Json report = Json::array();
    bool all_pass = true;
    std::string first_fail;
    for (const auto& s : results) {
        for (const auto& c : s.cases) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << s.name << ": " << c.name;
            if (!c.pass && !c.detail.empty()) std::cout << " — " << c.detail;
            std::cout << "\n";
            if (!c.pass && first_fail.empty()) first_fail = s.name + ": " + c.name;
        }
        std::cout << s.summary() << "\n";
        all_pass = all_pass && s.pass();
        report.push_back(suite_to_json(s));
    }
    if (!output.empty()) {
        Json j;
        j["suites"] = std::move(report);
        j["pass"] = all_pass;
        if (!first_fail.empty()) j["first_failure"] = first_fail;
        write_output(output, j.dump(2));
    }
    return all_pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Jack / b-Hurwitz / beta-ensemble computations"};
    app.require_subcommand(1);
    int threads = betajack::default_thread_count();
    app.add_option("--threads", threads, "worker thread count (default: BETAJACK_THREADS or hw)");

    auto* jack = app.add_subcommand("jack", "expand a Jack function in the power-sum basis");
    std::string jack_lambda, jack_alpha = "sym", jack_format = "text", jack_output;
    jack->add_option("--lambda", jack_lambda, "partition, e.g. 2,1")->required();
    jack->add_option("--alpha", jack_alpha, "sym or a rational p/q");
    jack->add_option("--format", jack_format)->check(CLI::IsMember({"text", "json"}));
    jack->add_option("--output", jack_output, "write to file instead of stdout");

    auto* hur = app.add_subcommand("hurwitz", "b-Hurwitz number table from a chosen pipeline");
    HurwitzArgs ha;
    hur->add_option("--weight", ha.weight,
                    "jacobi+|jacobi-|laguerre+|laguerre-|custom(L,M,u...)")
        ->required();
    hur->add_option("--N", ha.N, "max |lambda|")->required();
    hur->add_option("--R", ha.R, "max r")->required();
    hur->add_option("--b", ha.b_text, "sym or rational value of b");
    hur->add_option("--beta", ha.beta_text, "sym or rational beta (sets b = 2/beta - 1)");
    hur->add_option("--gamma", ha.gamma_text, "sym or rational gamma (named weights)");
    hur->add_option("--delta", ha.delta_text, "sym or rational delta (Jacobi weights)");
    hur->add_option("--pipeline", ha.pipeline)
        ->check(CLI::IsMember({"jack", "lambda", "factorization"}));
    hur->add_option("--format", ha.format)->check(CLI::IsMember({"json", "csv"}));
    hur->add_option("--output", ha.output);

    auto* cor = app.add_subcommand("correlator", "exact beta-ensemble correlator");
    CorrelatorArgs ca;
    cor->add_option("--ensemble", ca.ensemble)->check(CLI::IsMember({"jacobi", "laguerre"}));
    cor->add_option("--sign", ca.sign)->check(CLI::IsMember({"+", "-"}));
    cor->add_option("--lambda", ca.lambda, "partition of exponents")->required();
    cor->add_option("--n", ca.n, "sym or rational");
    cor->add_option("--beta", ca.beta, "sym or rational");
    cor->add_option("--c", ca.c, "sym or rational");
    cor->add_option("--d", ca.d, "sym or rational (Jacobi only)");
    cor->add_option("--format", ca.format)->check(CLI::IsMember({"text", "json"}));
    cor->add_option("--output", ca.output);

    auto* ver = app.add_subcommand("verify", "run machine-verification suites");
    std::string suite = "all", ver_output;
    int order = 6, max_size = -1;
    ver->add_option("--suite", suite, "all or one suite name");
    ver->add_option("--R", order, "Laurent order for the theorem suites");
    ver->add_option("--max-size", max_size, "override the suite's |lambda| bound");
    ver->add_option("--output", ver_output, "write a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (jack->parsed()) return cmd_jack(jack_lambda, jack_alpha, jack_format, jack_output);
        if (hur->parsed()) {
            ha.threads = threads;
            return cmd_hurwitz(ha);
        }
        if (cor->parsed()) return cmd_correlator(ca);
        if (ver->parsed()) return cmd_verify(suite, order, max_size, threads, ver_output);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const betajack::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const betajack::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputational;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputational;
    }
    return kExitUsage;
}
