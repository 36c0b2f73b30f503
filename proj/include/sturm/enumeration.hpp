#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sturm {

// Euler totient by trial factorization. Throws std::invalid_argument for 0.
std::uint64_t totient(std::uint64_t n);

// phi(0..limit) by a linear sieve; entry 0 is 0.
std::vector<std::uint32_t> totient_table(std::uint32_t limit);

// Closed forms for the number of words of length n in each class.
std::uint64_t st_count(std::uint32_t n);
std::uint64_t ls_count(std::uint32_t n);
std::uint64_t rs_count(std::uint32_t n);
std::uint64_t sbs_count(std::uint32_t n);
// Also evaluated at n = 0 and n = 1, below the range where the formula was stated.
std::uint64_t nbs_count(std::uint32_t n);
std::uint64_t bs_count(std::uint32_t n);
// Defined for n >= 2 only; throws std::invalid_argument otherwise.
std::uint64_t mf_count(std::uint32_t n);

// (sum_{i<=n} phi(i)) / (3 n^2 / pi^2). Throws std::invalid_argument for 0.
double totient_sum_ratio(std::uint32_t n);

struct CountVector {
    std::uint64_t st = 0;
    std::uint64_t ls = 0;
    std::uint64_t rs = 0;
    std::uint64_t sbs = 0;
    std::uint64_t nbs = 0;
    std::uint64_t bs = 0;
    std::uint64_t mf = 0;

    CountVector& operator+=(const CountVector& o) noexcept;
    friend bool operator==(const CountVector&, const CountVector&) = default;
};

// mf is reported as 0 for n <= 1, where the formula does not apply.
CountVector closed_form_counts(std::uint32_t n);

inline constexpr std::uint32_t kDefaultBruteCap = 20;

class CapExceeded : public std::out_of_range {
public:
    CapExceeded(std::uint32_t n, std::uint32_t cap);
};

struct CensusOptions {
    std::uint32_t cap = kDefaultBruteCap;
    // Number of disjoint chunks of the 2^n word space.
    std::uint32_t partitions = 1;
    // Run the chunks on separate threads.
    bool parallel = false;
};

// Counts of the words of length n in every class, by classifying each of
// the 2^n words. The result does not depend on partitioning or threading.
CountVector brute_force_census(std::uint32_t n, const CensusOptions& options = {});

// Census of the words whose bit encoding lies in [first, last).
CountVector census_range(std::uint32_t n, std::uint64_t first, std::uint64_t last);

struct EnumRow {
    std::uint32_t n = 0;
    CountVector closed;
    CountVector brute;
    bool match = false;
    bool mf_formula_applies = false;
};

struct EnumReport {
    std::vector<EnumRow> rows;

    bool all_match() const noexcept;
    std::string to_json() const;
    std::string to_csv() const;
    std::string to_plain() const;
};

EnumReport verify(std::uint32_t n_max, const CensusOptions& options = {});

}  // namespace sturm
