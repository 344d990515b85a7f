#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "floorsums/bernoulli.hpp"
#include "floorsums/congruences.hpp"
#include "floorsums/exact.hpp"
#include "floorsums/primes.hpp"
#include "floorsums/primesums.hpp"
#include "floorsums/report.hpp"

using floorsums::BernoulliCache;
using floorsums::Integer;
using floorsums::PrimeRange;
using floorsums::Rational;
using floorsums::RPolicy;
using floorsums::SweepReport;
using floorsums::TheoremId;
using floorsums::Verdict;

namespace {

void check_residues(const Verdict& v, long lhs, long rhs, bool pass) {
    REQUIRE(v.lhs_residue.has_value());
    REQUIRE(v.rhs_residue.has_value());
    CHECK(*v.lhs_residue == lhs);
    CHECK(*v.rhs_residue == rhs);
    CHECK(v.pass == pass);
}

}  // namespace

TEST_CASE("theorem names round-trip") {
    for (TheoremId id : floorsums::kAllTheorems) {
        auto back = floorsums::theorem_from_name(floorsums::theorem_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK(floorsums::theorem_from_name("wolstenholme") == TheoremId::wolstenholme_p3);
    CHECK(floorsums::theorem_from_name("grid") == TheoremId::grid_identity);
    CHECK(floorsums::theorem_from_name("cube-root") == TheoremId::cube_root_identity);
    CHECK(floorsums::theorem_from_name("glaisher") == TheoremId::glaisher_p2);
    CHECK(floorsums::theorem_from_name("sun") == TheoremId::sun_p3);
    CHECK_FALSE(floorsums::theorem_from_name("nonsense").has_value());
}

TEST_CASE("theorem1 at hand-checked points") {
    BernoulliCache cache;
    Verdict a = floorsums::verify_theorem1(Integer(5), 2, cache);
    CHECK(a.modulus == 5);
    CHECK(a.r == 2);
    check_residues(a, 4, 4, true);

    Verdict b = floorsums::verify_theorem1(Integer(3), 1, cache);
    check_residues(b, 2, 2, true);

    Verdict c = floorsums::verify_theorem1(Integer(5), 1, cache);
    check_residues(c, 3, 3, true);

    CHECK_THROWS_AS(floorsums::verify_theorem1(Integer(4), 1, cache), std::invalid_argument);
    CHECK_THROWS_AS(floorsums::verify_theorem1(Integer(5), 0, cache), std::invalid_argument);
    CHECK_THROWS_AS(floorsums::verify_theorem1(Integer(5), 5, cache), std::invalid_argument);
    CHECK_THROWS_AS(floorsums::verify_theorem1(Integer(2), 1, cache), std::invalid_argument);
}

TEST_CASE("theorem1 holds for every r at every odd prime up to 200") {
    BernoulliCache cache;
    for (const Integer& p : floorsums::primes_in(PrimeRange(Integer(3), Integer(200)))) {
        for (long r = 1; r <= p.get_si() - 1; ++r) {
            Verdict v = floorsums::verify_theorem1(p, r, cache);
            CAPTURE(p.get_si());
            CAPTURE(r);
            CHECK(v.pass);
        }
    }
}

TEST_CASE("theorem2 at hand-checked points") {
    BernoulliCache cache;
    Verdict a = floorsums::verify_theorem2(Integer(3), cache);
    CHECK(a.modulus == 3);
    check_residues(a, 0, 0, true);
    Verdict b = floorsums::verify_theorem2(Integer(5), cache);
    check_residues(b, 0, 0, true);
    CHECK_THROWS_AS(floorsums::verify_theorem2(Integer(2), cache), std::invalid_argument);
    CHECK_THROWS_AS(floorsums::verify_theorem2(Integer(9), cache), std::invalid_argument);
}

TEST_CASE("theorem2 holds for all odd primes up to 200") {
    BernoulliCache cache;
    for (const Integer& p : floorsums::primes_in(PrimeRange(Integer(3), Integer(200)))) {
        CHECK(floorsums::verify_theorem2(p, cache).pass);
    }
}

TEST_CASE("the full Fermat sum equals its Bernoulli closed form exactly") {
    // This is the exact identity behind both mod-p statements: for odd
    // primes, T(p) agrees with the polynomial closed form as rationals,
    // not merely mod p.
    BernoulliCache cache;
    for (const Integer& p : floorsums::primes_in(PrimeRange(Integer(3), Integer(100)))) {
        unsigned q = static_cast<unsigned>((p.get_ui() - 1) / 2);
        Rational brute(floorsums::partial_fermat_sum(p, 1));
        CHECK(brute == floorsums::s_q_closed_polynomial(p, q, cache));
    }
}

TEST_CASE("full-sum congruence at hand-checked points") {
    check_residues(floorsums::verify_eq_un(Integer(3)), 2, 2, true);
    check_residues(floorsums::verify_eq_un(Integer(5)), 3, 3, true);
    check_residues(floorsums::verify_eq_un(Integer(7)), 4, 4, true);
    CHECK(floorsums::verify_eq_un(Integer(3)).modulus == 3);
    CHECK_THROWS_AS(floorsums::verify_eq_un(Integer(2)), std::invalid_argument);
}

TEST_CASE("truncated-sum congruence at hand-checked points") {
    check_residues(floorsums::verify_eq_three_minus_p(Integer(3)), 0, 0, true);
    check_residues(floorsums::verify_eq_three_minus_p(Integer(5)), 4, 4, true);
    check_residues(floorsums::verify_eq_three_minus_p(Integer(7)), 5, 5, true);
    CHECK_THROWS_AS(floorsums::verify_eq_three_minus_p(Integer(2)), std::invalid_argument);
}

TEST_CASE("both full-sum congruences hold for all odd primes up to 200") {
    for (const Integer& p : floorsums::primes_in(PrimeRange(Integer(3), Integer(200)))) {
        CHECK(floorsums::verify_eq_un(p).pass);
        CHECK(floorsums::verify_eq_three_minus_p(p).pass);
    }
}

TEST_CASE("theorem1 at r=1 coincides with the full-sum congruence") {
    BernoulliCache cache;
    for (const Integer& p : floorsums::primes_in(PrimeRange(Integer(3), Integer(200)))) {
        Verdict a = floorsums::verify_theorem1(p, 1, cache);
        Verdict b = floorsums::verify_eq_un(p);
        CHECK(a.pass == b.pass);
        CHECK(*a.lhs_residue == *b.lhs_residue);
        CHECK(*a.rhs_residue == *b.rhs_residue);
    }
}

TEST_CASE("factorial congruence mod p^2 at hand-checked points") {
    BernoulliCache cache;
    Verdict a = floorsums::verify_glaisher(Integer(5), cache);
    CHECK(a.modulus == 25);
    check_residues(a, 24, 24, true);
    check_residues(floorsums::verify_glaisher(Integer(3), cache), 2, 2, true);
    check_residues(floorsums::verify_glaisher(Integer(7), cache), 34, 34, true);
    CHECK_THROWS_AS(floorsums::verify_glaisher(Integer(2), cache), std::invalid_argument);
    CHECK_THROWS_AS(floorsums::verify_glaisher(Integer(6), cache), std::invalid_argument);
}

TEST_CASE("factorial congruence mod p^3 at hand-checked points") {
    BernoulliCache cache;
    Verdict a = floorsums::verify_sun_p3(Integer(5), cache);
    CHECK(a.modulus == 125);
    check_residues(a, 24, 24, true);
    CHECK(floorsums::verify_sun_p3(Integer(7), cache).pass);
    CHECK(floorsums::verify_sun_p3(Integer(11), cache).pass);
    CHECK_THROWS_AS(floorsums::verify_sun_p3(Integer(3), cache), std::invalid_argument);
}

TEST_CASE("factorial congruences hold for all applicable primes up to 200") {
    BernoulliCache cache;
    for (const Integer& p : floorsums::primes_in(PrimeRange(Integer(3), Integer(200)))) {
        CHECK(floorsums::verify_glaisher(p, cache).pass);
        if (p >= 5) CHECK(floorsums::verify_sun_p3(p, cache).pass);
    }
}

TEST_CASE("central binomial congruence, including the genuine failure at 3") {
    Verdict five = floorsums::verify_wolstenholme(Integer(5));
    CHECK(five.modulus == 125);
    check_residues(five, 1, 1, true);
    CHECK(five.note.empty());

    check_residues(floorsums::verify_wolstenholme(Integer(7)), 1, 1, true);

    Verdict three = floorsums::verify_wolstenholme(Integer(3));
    check_residues(three, 10, 1, false);
    CHECK(three.note == "below the p >= 5 hypothesis");

    for (const Integer& p : floorsums::primes_in(PrimeRange(Integer(5), Integer(200)))) {
        CHECK(floorsums::verify_wolstenholme(p).pass);
    }
}

TEST_CASE("identity verdicts carry the exact values with modulus zero") {
    Verdict grid = floorsums::verify_identity(TheoremId::grid_identity, Integer(5));
    CHECK(grid.modulus == 0);
    check_residues(grid, 12, 12, true);

    Verdict cube = floorsums::verify_identity(TheoremId::cube_root_identity, Integer(7));
    check_residues(cube, 120, 120, true);

    CHECK_THROWS_AS(floorsums::verify_identity(TheoremId::eq_un, Integer(5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(floorsums::verify_identity(TheoremId::grid_identity, Integer(2)),
                    std::invalid_argument);
}

TEST_CASE("sweep enumerates applicable cells in declaration order") {
    BernoulliCache cache;
    SweepReport r1 = floorsums::sweep({TheoremId::eq_un}, PrimeRange(Integer(3), Integer(7)),
                                      RPolicy::all_valid_r, cache);
    REQUIRE(r1.verdicts.size() == 3);
    CHECK(r1.failures() == 0);
    CHECK(r1.verdicts[0].p == 3);
    CHECK(r1.verdicts[1].p == 5);
    CHECK(r1.verdicts[2].p == 7);

    // p = 3 is below the hypothesis, so the sweep skips it.
    SweepReport r2 = floorsums::sweep({TheoremId::wolstenholme_p3},
                                      PrimeRange(Integer(3), Integer(13)),
                                      RPolicy::all_valid_r, cache);
    CHECK(r2.verdicts.size() == 4);
    CHECK(r2.failures() == 0);

    // No odd prime in range at all.
    SweepReport r3 = floorsums::sweep({TheoremId::theorem1}, PrimeRange(Integer(2), Integer(2)),
                                      RPolicy::all_valid_r, cache);
    CHECK(r3.verdicts.empty());

    CHECK_THROWS_AS(floorsums::sweep({}, PrimeRange(Integer(3), Integer(7)),
                                     RPolicy::all_valid_r, cache),
                    std::invalid_argument);
}

TEST_CASE("sweep deduplicates and orders the requested theorems") {
    BernoulliCache cache;
    SweepReport r = floorsums::sweep(
        {TheoremId::cube_root_identity, TheoremId::eq_un, TheoremId::theorem1,
         TheoremId::eq_un},
        PrimeRange(Integer(3), Integer(5)), RPolicy::r1_only, cache);
    REQUIRE(r.theorems.size() == 3);
    CHECK(r.theorems[0] == TheoremId::theorem1);
    CHECK(r.theorems[1] == TheoremId::eq_un);
    CHECK(r.theorems[2] == TheoremId::cube_root_identity);
    // theorem-major, then p: theorem1 at 3 and 5, eq-un at 3 and 5, ...
    REQUIRE(r.verdicts.size() == 6);
    CHECK(r.verdicts[0].theorem == TheoremId::theorem1);
    CHECK(r.verdicts[1].theorem == TheoremId::theorem1);
    CHECK(r.verdicts[2].theorem == TheoremId::eq_un);
    CHECK(r.verdicts[4].theorem == TheoremId::cube_root_identity);
}

TEST_CASE("r policy controls the theorem1 grid") {
    BernoulliCache cache;
    SweepReport all = floorsums::sweep({TheoremId::theorem1},
                                       PrimeRange(Integer(3), Integer(11)),
                                       RPolicy::all_valid_r, cache);
    // 2 + 4 + 6 + 10 cells for p = 3, 5, 7, 11.
    CHECK(all.verdicts.size() == 22);
    for (const Verdict& v : all.verdicts) {
        REQUIRE(v.r.has_value());
        CHECK(*v.r >= 1);
        CHECK(Integer(*v.r) <= v.p - 1);
    }

    SweepReport first = floorsums::sweep({TheoremId::theorem1},
                                         PrimeRange(Integer(3), Integer(11)),
                                         RPolicy::r1_only, cache);
    CHECK(first.verdicts.size() == 4);
    for (const Verdict& v : first.verdicts) CHECK(v.r == 1);
}

TEST_CASE("residues in congruence verdicts are canonical") {
    BernoulliCache cache;
    std::vector<TheoremId> ids(floorsums::kAllTheorems.begin(), floorsums::kAllTheorems.end());
    SweepReport r = floorsums::sweep(ids, PrimeRange(Integer(3), Integer(23)),
                                     RPolicy::all_valid_r, cache);
    CHECK(r.failures() == 0);
    for (const Verdict& v : r.verdicts) {
        REQUIRE(v.lhs_residue.has_value());
        REQUIRE(v.rhs_residue.has_value());
        if (v.modulus >= 2) {
            CHECK(*v.lhs_residue >= 0);
            CHECK(*v.lhs_residue < v.modulus);
            CHECK(*v.rhs_residue >= 0);
            CHECK(*v.rhs_residue < v.modulus);
        }
        CHECK(v.pass == (*v.lhs_residue == *v.rhs_residue));
    }
}

TEST_CASE("sweeps are deterministic") {
    BernoulliCache cache1;
    BernoulliCache cache2;
    std::vector<TheoremId> ids(floorsums::kAllTheorems.begin(), floorsums::kAllTheorems.end());
    SweepReport a = floorsums::sweep(ids, PrimeRange(Integer(3), Integer(19)),
                                     RPolicy::all_valid_r, cache1);
    SweepReport b = floorsums::sweep(ids, PrimeRange(Integer(3), Integer(19)),
                                     RPolicy::all_valid_r, cache2);
    CHECK(a.verdicts == b.verdicts);
    CHECK(floorsums::to_csv(a) == floorsums::to_csv(b));
}

TEST_CASE("CSV round-trips a mixed sweep") {
    BernoulliCache cache;
    SweepReport r = floorsums::sweep(
        {TheoremId::theorem1, TheoremId::wolstenholme_p3, TheoremId::grid_identity},
        PrimeRange(Integer(3), Integer(13)), RPolicy::all_valid_r, cache);
    // Add a failing verdict with a note so the note column is exercised.
    r.verdicts.push_back(floorsums::verify_wolstenholme(Integer(3)));
    std::string csv = floorsums::to_csv(r);
    CHECK(floorsums::parse_csv(csv) == r.verdicts);
}

TEST_CASE("CSV escaping survives quotes and commas in notes") {
    Verdict v = floorsums::verify_eq_un(Integer(5));
    v.note = "a \"quoted\" note, with commas";
    SweepReport r;
    r.verdicts.push_back(v);
    std::string csv = floorsums::to_csv(r);
    std::vector<Verdict> back = floorsums::parse_csv(csv);
    REQUIRE(back.size() == 1);
    CHECK(back[0] == v);
}

TEST_CASE("JSON report carries metadata and typed rows") {
    BernoulliCache cache;
    SweepReport r = floorsums::sweep({TheoremId::eq_un, TheoremId::theorem1},
                                     PrimeRange(Integer(3), Integer(7)),
                                     RPolicy::all_valid_r, cache);
    r.tool_version = "0.1.0";
    r.timestamp = "2024-01-01T00:00:00Z";
    nlohmann::json doc = nlohmann::json::parse(floorsums::to_json(r));

    CHECK(doc["metadata"]["tool"] == "floorsums");
    CHECK(doc["metadata"]["version"] == "0.1.0");
    CHECK(doc["metadata"]["pmin"] == "3");
    CHECK(doc["metadata"]["pmax"] == "7");
    CHECK(doc["metadata"]["r_policy"] == "all");
    CHECK(doc["metadata"]["timestamp"] == "2024-01-01T00:00:00Z");
    REQUIRE(doc["metadata"]["theorems"].size() == 2);
    CHECK(doc["metadata"]["theorems"][0] == "theorem1");

    REQUIRE(doc["verdicts"].size() == r.verdicts.size());
    const auto& row = doc["verdicts"][0];
    CHECK(row["theorem"] == "theorem1");
    CHECK(row["p"] == "3");
    CHECK(row["r"] == 1);
    CHECK(row["modulus"] == "3");
    CHECK(row["pass"] == true);
    // eq-un rows carry r = null.
    CHECK(doc["verdicts"][doc["verdicts"].size() - 1]["r"].is_null());
}

TEST_CASE("verdict lines are stable one-liners") {
    BernoulliCache cache;
    Verdict a = floorsums::verify_theorem1(Integer(5), 2, cache);
    CHECK(floorsums::verdict_line(a) == "theorem1 p=5 r=2 m=5 lhs=4 rhs=4 PASS");

    Verdict b = floorsums::verify_eq_un(Integer(7));
    CHECK(floorsums::verdict_line(b) == "eq-un p=7 m=7 lhs=4 rhs=4 PASS");

    Verdict c = floorsums::verify_wolstenholme(Integer(3));
    CHECK(floorsums::verdict_line(c) ==
          "wolstenholme-p3 p=3 m=27 lhs=10 rhs=1 FAIL # below the p >= 5 hypothesis");
}
