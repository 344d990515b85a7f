#pragma once

/**
 * Verdict engine: evaluates both sides of each supported congruence or
 * identity exactly and reports canonical residues plus pass/fail.
 *
 * The checks, with their moduli:
 *   theorem1            sum_{k=1}^{p-r} floor(k^p/p)
 *                         == (B_{p+1}(r) - B_{p+1}(0))/(p(p+1))
 *                            + (r-1-p)(p-r)/(2p)              (mod p)
 *   theorem2            (B_{p+1}(p+1) + B_{p+1}(p) - 2B_{p+1})/(p(p+1))
 *                         == p^(p-1)                           (mod p)
 *   eq-un               sum_{k=1}^{p-1} floor(k^p/p) == (p+1)/2    (mod p)
 *   eq-three-minus-p    sum_{k=1}^{p-2} floor(k^p/p) == (3-p)/2    (mod p)
 *   glaisher-p2         (p-1)! == p B_{p-1} - p                (mod p^2)
 *   sun-p3              (p-1)! == -p B_{p-1}/(p-1) + p B_{2p-2}/(2(p-1))
 *                                 - (1/2)(p B_{p-1}/(p-1))^2   (mod p^3)
 *   wolstenholme-p3     C(2p-1, p-1) == 1                      (mod p^3)
 *   grid-identity       grid sum, brute == closed              (exact)
 *   cube-root-identity  cube-root sum, brute == closed         (exact)
 *
 * A congruence whose side has a denominator sharing a factor with the
 * modulus is undefined; the verdict then fails with an explanatory note
 * and empty residues, never a silent pass.
 */

#include "floorsums/bernoulli.hpp"
#include "floorsums/exact.hpp"
#include "floorsums/primes.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace floorsums {

enum class TheoremId {
    theorem1,
    theorem2,
    eq_un,
    eq_three_minus_p,
    glaisher_p2,
    sun_p3,
    wolstenholme_p3,
    grid_identity,
    cube_root_identity,
};

constexpr std::array<TheoremId, 9> kAllTheorems = {
    TheoremId::theorem1,         TheoremId::theorem2,
    TheoremId::eq_un,            TheoremId::eq_three_minus_p,
    TheoremId::glaisher_p2,      TheoremId::sun_p3,
    TheoremId::wolstenholme_p3,  TheoremId::grid_identity,
    TheoremId::cube_root_identity,
};

/// Canonical name, e.g. "eq-un", "wolstenholme-p3".
std::string_view theorem_name(TheoremId id);

/// Accepts canonical names plus short aliases ("wolstenholme", "grid", ...).
std::optional<TheoremId> theorem_from_name(std::string_view name);

/**
 * One congruence check. modulus 0 is the sentinel for exact identities
 * (grid/cube-root), where the "residues" are the full brute and closed
 * values. Residues are empty only when the congruence was undefined.
 */
struct Verdict {
    TheoremId theorem;
    Integer p;
    std::optional<long> r;  // set for theorem1 only
    Integer modulus;
    std::optional<Integer> lhs_residue;
    std::optional<Integer> rhs_residue;
    bool pass = false;
    std::string note;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict verify_theorem1(const Integer& p, long r, BernoulliCache& cache);
Verdict verify_theorem2(const Integer& p, BernoulliCache& cache);
Verdict verify_eq_un(const Integer& p);
Verdict verify_eq_three_minus_p(const Integer& p);
Verdict verify_glaisher(const Integer& p, BernoulliCache& cache);
Verdict verify_sun_p3(const Integer& p, BernoulliCache& cache);
Verdict verify_wolstenholme(const Integer& p);

/// kind must be grid_identity or cube_root_identity. p prime >= 3.
Verdict verify_identity(TheoremId kind, const Integer& p);

enum class RPolicy { all_valid_r, r1_only };

struct SweepReport {
    std::vector<Verdict> verdicts;
    std::string tool_version;
    Integer pmin;
    Integer pmax;
    std::vector<TheoremId> theorems;
    RPolicy r_policy = RPolicy::all_valid_r;
    std::string timestamp;  // caller-supplied; empty means unset

    std::size_t failures() const;
};

/**
 * Verdicts for every applicable (theorem, p, r) cell, ordered by
 * (theorem declaration order, p, r). Primes failing a theorem's
 * hypotheses (evenness, p < 5 for the mod-p^3 results) are skipped, not
 * errors. Deterministic: same inputs, same report.
 */
SweepReport sweep(std::vector<TheoremId> theorems, const PrimeRange& range,
                  RPolicy policy, BernoulliCache& cache);

}  // namespace floorsums
