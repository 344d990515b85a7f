// Command-line front end: exact Bernoulli values, prime floor sums with
// their closed forms, single congruence verdicts, and sweep reports.
//
// Exit codes: 0 success / all pass, 1 mathematical failure or disagreement,
// 2 usage error, 3 I/O error.

#include "floorsums/bernoulli.hpp"
#include "floorsums/congruences.hpp"
#include "floorsums/exact.hpp"
#include "floorsums/primes.hpp"
#include "floorsums/primesums.hpp"
#include "floorsums/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace floorsums;

constexpr const char* kVersion = "0.1.0";
constexpr long kDefaultPmaxGuard = 500;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

std::string utc_now() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

int run_bernoulli(const std::string& mode, long n, const std::string& x_text) {
    BernoulliCache cache;
    if (n < 0) return usage_error("n must be >= 0");
    const unsigned degree = static_cast<unsigned>(n);
    if (mode == "number") {
        if (!x_text.empty()) return usage_error("mode 'number' takes no argument x");
        std::cout << cache.number(degree).to_string() << "\n";
        return 0;
    }
    if (mode == "poly") {
        if (x_text.empty()) return usage_error("mode 'poly' needs an argument x");
        const Rational x = Rational::parse(x_text);
        std::cout << bernoulli_polynomial(degree, x, cache).to_string() << "\n";
        return 0;
    }
    return usage_error("mode must be 'number' or 'poly'");
}

struct SumValues {
    Integer brute;
    std::optional<Rational> closed;
};

SumValues evaluate_sum(const std::string& kind, const Integer& p,
                       std::optional<unsigned> q, std::optional<long> r,
                       BernoulliCache& cache) {
    SumValues values;
    if (kind == "grid") {
        values.brute = grid_sum(p);
        if (p >= 3) values.closed = Rational(grid_sum_closed(p));
    } else if (kind == "cube-root") {
        values.brute = cube_root_sum(p);
        values.closed = Rational(cube_root_sum_closed(p));
    } else if (kind == "partial") {
        if (!r) throw std::invalid_argument("kind 'partial' needs --r");
        values.brute = partial_fermat_sum(p, *r);
    } else if (kind == "S") {
        if (!q) throw std::invalid_argument("kind 'S' needs --q");
        values.brute = s_q_sum(p, *q);
        if (*q >= 1) values.closed = s_q_closed_polynomial(p, *q, cache);
    } else if (kind == "T") {
        // T(p) = S_q(p) at 2q+1 = p
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            throw std::invalid_argument("kind 'T' needs an odd prime p");
        const unsigned q_for_p = static_cast<unsigned>((p.get_ui() - 1) / 2);
        values.brute = s_q_sum(p, q_for_p);
        values.closed = s_q_closed_polynomial(p, q_for_p, cache);
    } else {
        throw std::invalid_argument("unknown kind '" + kind + "'");
    }
    return values;
}

int run_sum(const std::string& kind, const std::string& p_text,
            std::optional<unsigned> q, std::optional<long> r) {
    BernoulliCache cache;
    const Integer p = parse_integer(p_text);
    const SumValues values = evaluate_sum(kind, p, q, r, cache);
    std::cout << "brute " << to_string(values.brute) << "\n";
    if (!values.closed) return 0;
    std::cout << "closed " << values.closed->to_string() << "\n";
    if (*values.closed == Rational(values.brute)) {
        std::cout << "agree\n";
        return 0;
    }
    std::cout << "disagree\n";
    return 1;
}

Verdict run_one_verify(TheoremId id, const Integer& p, std::optional<long> r,
                       BernoulliCache& cache) {
    if (id == TheoremId::theorem1) {
        if (!r) throw std::invalid_argument("theorem1 needs --r");
        return verify_theorem1(p, *r, cache);
    }
    if (r) throw std::invalid_argument("--r applies to theorem1 only");
    switch (id) {
        case TheoremId::theorem2: return verify_theorem2(p, cache);
        case TheoremId::eq_un: return verify_eq_un(p);
        case TheoremId::eq_three_minus_p: return verify_eq_three_minus_p(p);
        case TheoremId::glaisher_p2: return verify_glaisher(p, cache);
        case TheoremId::sun_p3: return verify_sun_p3(p, cache);
        case TheoremId::wolstenholme_p3: return verify_wolstenholme(p);
        default: return verify_identity(id, p);
    }
}

int run_verify(const std::string& theorem, const std::string& p_text,
               std::optional<long> r) {
    const auto id = theorem_from_name(theorem);
    if (!id) return usage_error("unknown theorem '" + theorem + "'");
    BernoulliCache cache;
    const Verdict v = run_one_verify(*id, parse_integer(p_text), r, cache);
    std::cout << verdict_line(v) << "\n";
    return v.pass ? 0 : 1;
}

std::vector<TheoremId> parse_theorem_list(const std::string& list) {
    if (list == "all")
        return std::vector<TheoremId>(kAllTheorems.begin(), kAllTheorems.end());
    std::vector<TheoremId> ids;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::string name =
            list.substr(start, comma == std::string::npos ? comma : comma - start);
        const auto id = theorem_from_name(name);
        if (!id) throw std::invalid_argument("unknown theorem '" + name + "'");
        ids.push_back(*id);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return ids;
}

int run_sweep(const std::string& theorems_text, const std::string& pmin_text,
              const std::string& pmax_text, const std::string& r_policy_text,
              const std::string& format, const std::string& out_path,
              std::string timestamp, bool allow_large) {
    const Integer pmin = parse_integer(pmin_text);
    const Integer pmax = parse_integer(pmax_text);
    if (pmin < 2 || pmax < pmin) return usage_error("need 2 <= pmin <= pmax");
    if (pmax > kDefaultPmaxGuard && !allow_large)
        return usage_error("pmax > " + std::to_string(kDefaultPmaxGuard) +
                           " can take very long; pass --allow-large to override");
    const std::vector<TheoremId> ids = parse_theorem_list(theorems_text);
    const RPolicy policy = r_policy_text == "r1" ? RPolicy::r1_only : RPolicy::all_valid_r;

    BernoulliCache cache;
    SweepReport report = sweep(ids, PrimeRange(pmin, pmax), policy, cache);
    report.tool_version = kVersion;
    report.timestamp = timestamp.empty() ? utc_now() : std::move(timestamp);

    std::string content;
    if (format == "csv") {
        content = to_csv(report);
    } else if (format == "json") {
        content = to_json(report);
    } else {
        for (const Verdict& v : report.verdicts) content += verdict_line(v) + "\n";
    }

    if (out_path.empty()) {
        std::cout << content;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return 3;
        }
        out << content;
        out.flush();
        if (!out) {
            std::cerr << "error: write to '" << out_path << "' failed\n";
            return 3;
        }
    }

    const std::size_t failures = report.failures();
    std::cerr << report.verdicts.size() << " verdicts, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact prime floor sums, Bernoulli values, and congruence checks"};
    app.require_subcommand(1);

    std::string mode, x_text;
    long poly_n = 0;
    CLI::App* bernoulli = app.add_subcommand("bernoulli", "Print an exact Bernoulli value");
    bernoulli->add_option("mode", mode, "'number' or 'poly'")->required();
    bernoulli->add_option("n", poly_n, "index / degree")->required();
    bernoulli->add_option("x", x_text, "evaluation point (rational, e.g. 2 or -1/3)");

    std::string kind, sum_p;
    std::optional<unsigned> sum_q;
    std::optional<long> sum_r;
    CLI::App* sum = app.add_subcommand("sum", "Evaluate a floor sum, brute and closed");
    sum->add_option("--kind", kind, "grid | cube-root | partial | S | T")->required();
    sum->add_option("--p", sum_p, "prime")->required();
    sum->add_option("--q", sum_q, "exponent parameter (kind S)");
    sum->add_option("--r", sum_r, "upper-bound offset (kind partial)");

    std::string theorem, verify_p;
    std::optional<long> verify_r;
    CLI::App* verify = app.add_subcommand("verify", "Check one congruence");
    verify->add_option("--theorem", theorem, "theorem name")->required();
    verify->add_option("--p", verify_p, "prime")->required();
    verify->add_option("--r", verify_r, "r parameter (theorem1)");

    std::string theorems_text, pmin_text, pmax_text, out_path, timestamp;
    std::string r_policy_text = "all";
    std::string format = "text";
    bool allow_large = false;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Check congruences over a prime range");
    sweep_cmd->add_option("--theorems", theorems_text, "comma-separated names, or 'all'")
        ->required();
    sweep_cmd->add_option("--pmin", pmin_text, "lower bound")->required();
    sweep_cmd->add_option("--pmax", pmax_text, "upper bound")->required();
    sweep_cmd->add_option("--r-policy", r_policy_text, "all | r1")
        ->check(CLI::IsMember({"all", "r1"}));
    sweep_cmd->add_option("--format", format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sweep_cmd->add_option("--out", out_path, "output file (default: stdout)");
    sweep_cmd->add_option("--timestamp", timestamp,
                          "fixed timestamp recorded in JSON metadata");
    sweep_cmd->add_flag("--allow-large", allow_large, "lift the pmax guard of 500");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(bernoulli)) return run_bernoulli(mode, poly_n, x_text);
        if (app.got_subcommand(sum)) return run_sum(kind, sum_p, sum_q, sum_r);
        if (app.got_subcommand(verify)) return run_verify(theorem, verify_p, verify_r);
        return run_sweep(theorems_text, pmin_text, pmax_text, r_policy_text, format,
                         out_path, timestamp, allow_large);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    }
}
