#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "oracles.hpp"
#include "sturm/enumeration.hpp"

using namespace sturm;

TEST_CASE("totient") {
    CHECK(totient(12) == 4);
    CHECK(totient(1) == 1);
    CHECK(totient(10) == 4);
    CHECK_THROWS_AS(totient(0), std::invalid_argument);

    const auto table = totient_table(10000);
    REQUIRE(table.size() == 10001);
    for (std::uint32_t n = 1; n <= 10000; ++n) {
        REQUIRE(table[n] == totient(n));
        if (n <= 2000) REQUIRE(table[n] == oracle::totient_by_gcd(n));
    }
}

TEST_CASE("closed forms at small n") {
    CHECK(st_count(0) == 1);
    CHECK(st_count(3) == 8);
    CHECK(st_count(4) == 14);

    CHECK(ls_count(0) == 1);
    CHECK(ls_count(2) == 4);
    CHECK(rs_count(2) == 4);

    CHECK(sbs_count(10) == 4);
    CHECK(sbs_count(0) == 1);
    CHECK(sbs_count(1) == 2);

    CHECK(nbs_count(10) == 14);
    CHECK(nbs_count(0) == 0);
    CHECK(nbs_count(4) == 6);

    CHECK(bs_count(10) == 18);
    CHECK(bs_count(0) == 1);
    CHECK(bs_count(1) == 2);

    CHECK(mf_count(4) == 2);
    CHECK(mf_count(2) == 0);
    CHECK(mf_count(3) == 0);
    CHECK(mf_count(6) == 6);
    CHECK_THROWS_AS(mf_count(1), std::invalid_argument);
    CHECK_THROWS_AS(mf_count(0), std::invalid_argument);
}

TEST_CASE("closed-form identities") {
    // Evaluated from one sieve so the loop stays linear per step.
    const auto phi = totient_table(10003);
    std::uint64_t st = 1;
    std::uint64_t ls = phi[1];
    for (std::uint32_t n = 0; n <= 10000; n += (n < 300 ? 1 : 97)) {
        INFO("n = " << n);
        REQUIRE(ls_count(n) == rs_count(n));
        REQUIRE(bs_count(n) == sbs_count(n) + nbs_count(n));
        REQUIRE(st_count(n + 1) - st_count(n) == ls_count(n));
        REQUIRE(sbs_count(n) == ls_count(n + 1) - ls_count(n));
        if (n < 300) {
            REQUIRE(st_count(n) == st);
            REQUIRE(ls_count(n) == ls);
            st += ls;
            ls += phi[n + 2];
        }
    }
}

TEST_CASE("totient_sum_ratio") {
    CHECK(totient_sum_ratio(1) == doctest::Approx(std::numbers::pi * std::numbers::pi / 3.0));
    const double big = totient_sum_ratio(1000000);
    const double small = totient_sum_ratio(1000);
    CHECK(big >= 0.99);
    CHECK(big <= 1.01);
    CHECK(std::abs(big - 1.0) < std::abs(small - 1.0));
    CHECK_THROWS_AS(totient_sum_ratio(0), std::invalid_argument);
}

// Produced by an exhaustive balance-check script over all 2^n words and
// checked by hand against the worked examples (aabb, bbaa at n = 4; the
// 18 bispecial words at n = 10).
TEST_CASE("golden census") {
    const std::vector<CountVector> golden = {
        {1, 1, 1, 1, 0, 1, 0},      {2, 2, 2, 2, 0, 2, 0},      {4, 4, 4, 2, 2, 4, 0},
        {8, 6, 6, 4, 0, 4, 0},      {14, 10, 10, 2, 6, 8, 2},   {24, 12, 12, 6, 0, 6, 0},
        {36, 18, 18, 4, 6, 10, 6},  {54, 22, 22, 6, 4, 10, 0},  {76, 28, 28, 4, 10, 14, 6},
        {104, 32, 32, 10, 0, 10, 4}, {136, 42, 42, 4, 14, 18, 10},
    };
    for (std::uint32_t n = 0; n < golden.size(); ++n) {
        INFO("n = " << n);
        CHECK(brute_force_census(n) == golden[n]);
        CHECK(closed_form_counts(n) == golden[n]);
    }
}

TEST_CASE("census partitioning") {
    const CountVector whole = brute_force_census(12);
    for (std::uint32_t parts : {2U, 3U, 4U, 7U, 16U, 5000U}) {
        CHECK(brute_force_census(12, {.partitions = parts}) == whole);
        CHECK(brute_force_census(12, {.partitions = parts, .parallel = true}) == whole);
    }
    CHECK(brute_force_census(3, {.partitions = 64}) == brute_force_census(3));
}

TEST_CASE("census cap") {
    CHECK_THROWS_AS(brute_force_census(21), CapExceeded);
    CHECK_THROWS_AS(brute_force_census(9, {.cap = 8}), CapExceeded);
    CHECK_NOTHROW(brute_force_census(8, {.cap = 8}));
    CHECK_THROWS_AS(verify(9, {.cap = 8}), CapExceeded);
}

TEST_CASE("verify report") {
    const auto single = verify(0);
    REQUIRE(single.rows.size() == 1);
    CHECK(single.rows[0].match);
    CHECK_FALSE(single.rows[0].mf_formula_applies);

    const auto report = verify(10);
    REQUIRE(report.rows.size() == 11);
    CHECK(report.all_match());
    CHECK(report.rows[10].closed.bs == 18);
    CHECK(report.rows[10].brute.bs == 18);

    const auto j = nlohmann::json::parse(report.to_json());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 11);
    for (const auto& row : j) {
        REQUIRE(row.at("n").is_number_unsigned());
        REQUIRE(row.at("match").is_boolean());
        for (const char* side : {"closed", "brute"}) {
            for (const char* f : {"st", "ls", "rs", "sbs", "nbs", "bs", "mf"}) {
                REQUIRE(row.at(side).at(f).is_number_unsigned());
            }
        }
    }
    CHECK(j[10]["closed"]["bs"] == 18);

    const auto csv = report.to_csv();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
    const auto plain = report.to_plain();
    CHECK(plain.find("MISMATCH") == std::string::npos);
    CHECK(plain.find("18/18") != std::string::npos);
}
