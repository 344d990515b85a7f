#include "floorsums/congruences.hpp"

#include "floorsums/primesums.hpp"

#include <algorithm>

namespace floorsums {

namespace {

constexpr std::string_view kBelowHypothesisNote = "below the p >= 5 hypothesis";

void require_prime(const Integer& p, const char* who) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(who) + " needs a prime p");
}

void require_odd_prime(const Integer& p, const char* who) {
    require_prime(p, who);
    if (p == 2) throw std::invalid_argument(std::string(who) + " needs an odd prime");
}

// Reduces both sides mod m; an undefined side turns into a failing verdict
// with the offending denominator in the note.
Verdict congruence_verdict(TheoremId id, const Integer& p, std::optional<long> r,
                           const Integer& modulus, const Rational& lhs,
                           const Rational& rhs) {
    Verdict v;
    v.theorem = id;
    v.p = p;
    v.r = r;
    v.modulus = modulus;
    try {
        v.lhs_residue = rational_mod(lhs, modulus).value();
        v.rhs_residue = rational_mod(rhs, modulus).value();
        v.pass = *v.lhs_residue == *v.rhs_residue;
    } catch (const NonInvertibleDenominatorError& e) {
        v.lhs_residue.reset();
        v.rhs_residue.reset();
        v.pass = false;
        v.note = e.what();
    }
    return v;
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::theorem1: return "theorem1";
        case TheoremId::theorem2: return "theorem2";
        case TheoremId::eq_un: return "eq-un";
        case TheoremId::eq_three_minus_p: return "eq-three-minus-p";
        case TheoremId::glaisher_p2: return "glaisher-p2";
        case TheoremId::sun_p3: return "sun-p3";
        case TheoremId::wolstenholme_p3: return "wolstenholme-p3";
        case TheoremId::grid_identity: return "grid-identity";
        case TheoremId::cube_root_identity: return "cube-root-identity";
    }
    throw std::logic_error("unknown theorem id");
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (TheoremId id : kAllTheorems)
        if (name == theorem_name(id)) return id;
    if (name == "glaisher") return TheoremId::glaisher_p2;
    if (name == "sun") return TheoremId::sun_p3;
    if (name == "wolstenholme") return TheoremId::wolstenholme_p3;
    if (name == "grid") return TheoremId::grid_identity;
    if (name == "cube-root") return TheoremId::cube_root_identity;
    return std::nullopt;
}

Verdict verify_theorem1(const Integer& p, long r, BernoulliCache& cache) {
    require_odd_prime(p, "theorem1");
    if (r < 1 || Integer(r) > p - 1)
        throw std::invalid_argument("theorem1 needs 1 <= r <= p-1");
    const Rational lhs(partial_fermat_sum(p, r));
    const unsigned n = p.get_ui() + 1;  // degree p+1
    const Rational poly_term =
        (bernoulli_polynomial(n, Rational(r), cache) - cache.number(n)) /
        Rational(Integer(p * (p + 1)));
    const Rational linear_term(Integer((r - 1 - p) * (p - r)), Integer(2 * p));
    return congruence_verdict(TheoremId::theorem1, p, r, p, lhs,
                              poly_term + linear_term);
}

Verdict verify_theorem2(const Integer& p, BernoulliCache& cache) {
    require_odd_prime(p, "theorem2");
    const unsigned n = p.get_ui() + 1;
    const Rational b_n = cache.number(n);
    const Rational lhs = (bernoulli_polynomial(n, Rational(Integer(p + 1)), cache) +
                          bernoulli_polynomial(n, Rational(p), cache) - b_n - b_n) /
                         Rational(Integer(p * (p + 1)));
    const Rational rhs(pow_integer(p, p.get_ui() - 1));
    return congruence_verdict(TheoremId::theorem2, p, std::nullopt, p, lhs, rhs);
}

Verdict verify_eq_un(const Integer& p) {
    require_odd_prime(p, "eq-un");
    const Rational lhs(partial_fermat_sum(p, 1));
    const Rational rhs(Integer(p + 1), Integer(2));
    return congruence_verdict(TheoremId::eq_un, p, std::nullopt, p, lhs, rhs);
}

Verdict verify_eq_three_minus_p(const Integer& p) {
    require_odd_prime(p, "eq-three-minus-p");
    const Rational lhs(partial_fermat_sum(p, 2));
    const Rational rhs(Integer(3 - p), Integer(2));
    return congruence_verdict(TheoremId::eq_three_minus_p, p, std::nullopt, p, lhs, rhs);
}

Verdict verify_glaisher(const Integer& p, BernoulliCache& cache) {
    require_prime(p, "glaisher-p2");
    if (p < 3) throw std::invalid_argument("glaisher-p2 needs p >= 3");
    const Integer modulus = p * p;
    const Rational lhs(factorial_mod(p - 1, modulus).value());
    const Rational rhs = Rational(p) * cache.number(p.get_ui() - 1) - Rational(p);
    return congruence_verdict(TheoremId::glaisher_p2, p, std::nullopt, modulus, lhs, rhs);
}

Verdict verify_sun_p3(const Integer& p, BernoulliCache& cache) {
    require_prime(p, "sun-p3");
    if (p < 5) throw std::invalid_argument("sun-p3 needs p >= 5");
    const Integer modulus = p * p * p;
    const Rational lhs(factorial_mod(p - 1, modulus).value());
    const unsigned long pu = p.get_ui();
    const Rational wilson_term =
        Rational(p) * cache.number(pu - 1) / Rational(Integer(p - 1));
    const Rational rhs = -wilson_term +
                         Rational(p) * cache.number(2 * pu - 2) /
                             Rational(Integer(2 * (p - 1))) -
                         wilson_term * wilson_term / Rational(2);
    return congruence_verdict(TheoremId::sun_p3, p, std::nullopt, modulus, lhs, rhs);
}

Verdict verify_wolstenholme(const Integer& p) {
    require_prime(p, "wolstenholme-p3");
    const Integer modulus = p * p * p;
    Verdict v = congruence_verdict(TheoremId::wolstenholme_p3, p, std::nullopt, modulus,
                                   Rational(binomial(2 * p - 1, p - 1)), Rational(1));
    if (p < 5) v.note = std::string(kBelowHypothesisNote);
    return v;
}

Verdict verify_identity(TheoremId kind, const Integer& p) {
    require_prime(p, "identity check");
    if (p < 3) throw std::invalid_argument("identity checks need p >= 3");
    Verdict v;
    v.theorem = kind;
    v.p = p;
    v.modulus = 0;  // exact identity, not a congruence
    if (kind == TheoremId::grid_identity) {
        v.lhs_residue = grid_sum(p);
        v.rhs_residue = grid_sum_closed(p);
    } else if (kind == TheoremId::cube_root_identity) {
        v.lhs_residue = cube_root_sum(p);
        v.rhs_residue = cube_root_sum_closed(p);
    } else {
        throw std::invalid_argument("verify_identity handles the grid and cube-root sums");
    }
    v.pass = *v.lhs_residue == *v.rhs_residue;
    return v;
}

std::size_t SweepReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(),
                      [](const Verdict& v) { return !v.pass; }));
}

namespace {

bool applicable(TheoremId id, const Integer& p) {
    switch (id) {
        case TheoremId::theorem1:
        case TheoremId::theorem2:
        case TheoremId::eq_un:
        case TheoremId::eq_three_minus_p:
            return p >= 3 && p % 2 == 1;
        case TheoremId::glaisher_p2:
        case TheoremId::grid_identity:
        case TheoremId::cube_root_identity:
            return p >= 3;
        case TheoremId::sun_p3:
        case TheoremId::wolstenholme_p3:
            return p >= 5;
    }
    return false;
}

void run_cell(TheoremId id, const Integer& p, RPolicy policy, BernoulliCache& cache,
              std::vector<Verdict>& out) {
    switch (id) {
        case TheoremId::theorem1: {
            const long r_max = policy == RPolicy::r1_only ? 1 : p.get_si() - 1;
            for (long r = 1; r <= r_max; ++r)
                out.push_back(verify_theorem1(p, r, cache));
            return;
        }
        case TheoremId::theorem2:
            out.push_back(verify_theorem2(p, cache));
            return;
        case TheoremId::eq_un:
            out.push_back(verify_eq_un(p));
            return;
        case TheoremId::eq_three_minus_p:
            out.push_back(verify_eq_three_minus_p(p));
            return;
        case TheoremId::glaisher_p2:
            out.push_back(verify_glaisher(p, cache));
            return;
        case TheoremId::sun_p3:
            out.push_back(verify_sun_p3(p, cache));
            return;
        case TheoremId::wolstenholme_p3:
            out.push_back(verify_wolstenholme(p));
            return;
        case TheoremId::grid_identity:
        case TheoremId::cube_root_identity:
            out.push_back(verify_identity(id, p));
            return;
    }
}

}  // namespace

SweepReport sweep(std::vector<TheoremId> theorems, const PrimeRange& range,
                  RPolicy policy, BernoulliCache& cache) {
    if (theorems.empty()) throw std::invalid_argument("sweep needs at least one theorem");
    std::sort(theorems.begin(), theorems.end());
    theorems.erase(std::unique(theorems.begin(), theorems.end()), theorems.end());

    SweepReport report;
    report.pmin = range.lower;
    report.pmax = range.upper;
    report.theorems = theorems;
    report.r_policy = policy;

    const std::vector<Integer> primes = primes_in(range);
    for (TheoremId id : theorems)
        for (const Integer& p : primes)
            if (applicable(id, p)) run_cell(id, p, policy, cache, report.verdicts);
    return report;
}

}  // namespace floorsums
