#include <doctest.h>

#include <random>

#include <json.hpp>

#include "oracles.hpp"
#include "sturm/forbidden.hpp"
#include "sturm/sturmian.hpp"

using namespace sturm;

namespace {

std::set<Word> words_of(const std::vector<ForbiddenWitness>& ws) {
    std::set<Word> out;
    for (const auto& w : ws) out.insert(w.word);
    return out;
}

}  // namespace

TEST_CASE("is_minimal_forbidden") {
    CHECK(is_minimal_forbidden("aabb"_w));
    CHECK_FALSE(is_minimal_forbidden("abab"_w));
    CHECK_FALSE(is_minimal_forbidden("aabba"_w));
    CHECK_FALSE(is_minimal_forbidden("a"_w));
    CHECK_THROWS_AS(is_minimal_forbidden(Word{}), std::invalid_argument);

    // Against the definition: every proper factor, not just the two maximal ones.
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const auto& s : oracle::all_words(n)) {
            bool proper_ok = true;
            for (std::size_t i = 0; i < n && proper_ok; ++i) {
                for (std::size_t len = 0; i + len <= n && proper_ok; ++len) {
                    if (len == n) continue;
                    proper_ok = oracle::balanced(s.substr(i, len));
                }
            }
            REQUIRE(is_minimal_forbidden(Word(s)) == (!oracle::balanced(s) && proper_ok));
        }
    }
}

TEST_CASE("structural minimal forbidden words") {
    const auto four = minimal_forbidden_structural(4);
    REQUIRE(four.size() == 2);
    CHECK(four[0] == ForbiddenWitness{"aabb"_w, {2, 2, Orientation::upper}, "ab"_w});
    CHECK(four[1] == ForbiddenWitness{"bbaa"_w, {2, 2, Orientation::lower}, "ba"_w});
    CHECK(minimal_forbidden_structural(5).empty());
    CHECK(minimal_forbidden_structural(6).size() == 6);
    CHECK(minimal_forbidden_structural(2).empty());
    CHECK_THROWS_AS(minimal_forbidden_structural(1), std::invalid_argument);

    for (std::uint32_t n = 2; n <= 14; ++n) {
        INFO("n = " << n);
        const auto ws = minimal_forbidden_structural(n);
        for (const auto& w : ws) {
            const Word c = christoffel_word(w.christoffel);
            REQUIRE(c == c.front() + w.interior + c.back());
            REQUIRE(w.word == c.back() + w.interior + c.front());
            REQUIRE_FALSE(is_primitive_christoffel(w.christoffel));
            REQUIRE(classify(w.interior).tag == SpecialTag::NonStrictlyBispecial);
        }
        const auto oracle_set = minimal_forbidden_oracle(n);
        REQUIRE(words_of(ws) == oracle_set);
        REQUIRE(oracle_set.size() == mf_count(n));
        for (const auto& w : oracle_set) REQUIRE(oracle_set.count(reverse(w)) == 1);
    }
}

TEST_CASE("oracle edge cases") {
    CHECK(minimal_forbidden_oracle(2).empty());
    CHECK(minimal_forbidden_oracle(3).empty());
    CHECK(minimal_forbidden_oracle(4) == std::set<Word>{"aabb"_w, "bbaa"_w});
    CHECK(minimal_forbidden_oracle(8).size() == 6);
    CHECK_THROWS_AS(minimal_forbidden_oracle(0), std::invalid_argument);
    CHECK_THROWS_AS(minimal_forbidden_oracle(21), CapExceeded);
    CHECK_THROWS_AS(minimal_forbidden_oracle(9, 8), CapExceeded);
}

TEST_CASE("forbidden words never occur in Sturmian words") {
    std::vector<std::string> forbidden;
    for (std::uint32_t n = 4; n <= 16; ++n) {
        for (const auto& w : minimal_forbidden_structural(n)) forbidden.emplace_back(w.word.str());
    }
    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::size_t> len(1, 16);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::string s = oracle::random_sturmian(rng, len(rng));
        REQUIRE(is_sturmian(Word(s)));
        for (const auto& f : forbidden) REQUIRE(s.find(f) == std::string::npos);
    }
}

TEST_CASE("minimal forbidden partial sums grow quadratically") {
    const auto phi = totient_table(10000);
    std::uint64_t sum = 0;
    for (std::uint32_t n = 2; n <= 10000; ++n) {
        sum += 2 * (n - 1 - std::uint64_t{phi[n]});
        REQUIRE(static_cast<double>(sum) / (double(n) * n) <= 2.0);
    }
    for (std::uint32_t n : {2U, 97U, 1000U, 2310U}) CHECK(2 * (n - 1 - std::uint64_t{phi[n]}) == mf_count(n));
}

TEST_CASE("witness JSON") {
    const auto j = nlohmann::json::parse(witnesses_to_json(minimal_forbidden_structural(4)));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["word"] == "aabb");
    CHECK(j[0]["p"] == 2);
    CHECK(j[0]["q"] == 2);
    CHECK(j[0]["orientation"] == "upper");
    CHECK(j[0]["interior"] == "ab");
}
