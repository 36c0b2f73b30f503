#include "sturm/enumeration.hpp"

#include <algorithm>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sturm/forbidden.hpp"
#include "sturm/sturmian.hpp"
#include "sturm/word.hpp"

namespace sturm {

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("totient is defined for n >= 1");
    std::uint64_t result = n;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f != 0) continue;
        while (n % f == 0) n /= f;
        result -= result / f;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::uint32_t> totient_table(std::uint32_t limit) {
    std::vector<std::uint32_t> phi(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<std::uint32_t> primes;
    if (limit >= 1) phi[1] = 1;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (phi[i] == 0) {
            phi[i] = i - 1;
            primes.push_back(i);
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t m = static_cast<std::uint64_t>(p) * i;
            if (m > limit) break;
            if (i % p == 0) {
                phi[m] = phi[i] * p;
                break;
            }
            phi[m] = phi[i] * (p - 1);
        }
    }
    return phi;
}

namespace {

std::uint64_t totient_prefix_sum(const std::vector<std::uint32_t>& phi, std::uint32_t upto) {
    std::uint64_t sum = 0;
    for (std::uint32_t i = 1; i <= upto; ++i) sum += phi[i];
    return sum;
}

}  // namespace

std::uint64_t st_count(std::uint32_t n) {
    const auto phi = totient_table(n);
    std::uint64_t sum = 1;
    for (std::uint32_t i = 1; i <= n; ++i) sum += static_cast<std::uint64_t>(n - i + 1) * phi[i];
    return sum;
}

std::uint64_t ls_count(std::uint32_t n) { return totient_prefix_sum(totient_table(n + 1), n + 1); }

std::uint64_t rs_count(std::uint32_t n) { return ls_count(n); }

std::uint64_t sbs_count(std::uint32_t n) { return totient(std::uint64_t{n} + 2); }

std::uint64_t nbs_count(std::uint32_t n) { return 2 * (std::uint64_t{n} + 1 - sbs_count(n)); }

std::uint64_t bs_count(std::uint32_t n) { return 2 * (std::uint64_t{n} + 1) - sbs_count(n); }

std::uint64_t mf_count(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("the minimal forbidden word count is defined for n > 1");
    return 2 * (std::uint64_t{n} - 1 - totient(n));
}

double totient_sum_ratio(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("totient_sum_ratio needs n >= 1");
    const auto sum = static_cast<double>(totient_prefix_sum(totient_table(n), n));
    const double nd = n;
    return sum / (3.0 * nd * nd / (std::numbers::pi * std::numbers::pi));
}

CountVector& CountVector::operator+=(const CountVector& o) noexcept {
    st += o.st;
    ls += o.ls;
    rs += o.rs;
    sbs += o.sbs;
    nbs += o.nbs;
    bs += o.bs;
    mf += o.mf;
    return *this;
}

CountVector closed_form_counts(std::uint32_t n) {
    return {st_count(n), ls_count(n), rs_count(n), sbs_count(n),
            nbs_count(n), bs_count(n), n >= 2 ? mf_count(n) : 0};
}

CapExceeded::CapExceeded(std::uint32_t n, std::uint32_t cap)
    : std::out_of_range("length " + std::to_string(n) + " exceeds the brute-force cap " +
                        std::to_string(cap)) {}

CountVector census_range(std::uint32_t n, std::uint64_t first, std::uint64_t last) {
    CountVector c;
    for (std::uint64_t bits = first; bits < last; ++bits) {
        const Word w = Word::from_bits(bits, n);
        const SpecialClass cls = classify(w);
        if (!cls.is_sturmian()) {
            if (n >= 1 && is_minimal_forbidden(w)) ++c.mf;
            continue;
        }
        ++c.st;
        if (cls.is_left_special()) ++c.ls;
        if (cls.is_right_special()) ++c.rs;
        if (cls.tag == SpecialTag::StrictlyBispecial) ++c.sbs;
        if (cls.tag == SpecialTag::NonStrictlyBispecial) ++c.nbs;
        if (cls.is_bispecial()) ++c.bs;
    }
    return c;
}

CountVector brute_force_census(std::uint32_t n, const CensusOptions& options) {
    if (n > options.cap) throw CapExceeded(n, options.cap);
    if (n >= 64) throw std::invalid_argument("brute-force census supports n < 64");
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t parts = std::max<std::uint64_t>(1, options.partitions);

    std::vector<std::uint64_t> bounds(parts + 1);
    for (std::uint64_t k = 0; k <= parts; ++k) bounds[k] = total / parts * k + std::min(k, total % parts);

    std::vector<CountVector> partial(parts);
    if (options.parallel && parts > 1) {
        std::vector<std::jthread> workers;
        workers.reserve(parts);
        for (std::uint64_t k = 0; k < parts; ++k) {
            workers.emplace_back([&, k] { partial[k] = census_range(n, bounds[k], bounds[k + 1]); });
        }
    } else {
        for (std::uint64_t k = 0; k < parts; ++k) partial[k] = census_range(n, bounds[k], bounds[k + 1]);
    }

    CountVector total_counts;
    for (const auto& c : partial) total_counts += c;
    return total_counts;
}

bool EnumReport::all_match() const noexcept {
    return std::all_of(rows.begin(), rows.end(), [](const EnumRow& r) { return r.match; });
}

namespace {

nlohmann::json to_json(const CountVector& c) {
    return {{"st", c.st}, {"ls", c.ls}, {"rs", c.rs}, {"sbs", c.sbs},
            {"nbs", c.nbs}, {"bs", c.bs}, {"mf", c.mf}};
}

constexpr const char* kFields[] = {"st", "ls", "rs", "sbs", "nbs", "bs", "mf"};

std::vector<std::uint64_t> values(const CountVector& c) {
    return {c.st, c.ls, c.rs, c.sbs, c.nbs, c.bs, c.mf};
}

}  // namespace

std::string EnumReport::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"closed", sturm::to_json(r.closed)},
                       {"brute", sturm::to_json(r.brute)},
                       {"match", r.match},
                       {"mf_formula_applies", r.mf_formula_applies}});
    }
    return arr.dump(2) + "\n";
}

std::string EnumReport::to_csv() const {
    constexpr int kWidth = 10;
    std::ostringstream os;
    os << std::setw(3) << "n";
    for (const char* prefix : {"closed_", "brute_"}) {
        for (const char* f : kFields) os << ',' << std::setw(kWidth) << (std::string(prefix) + f);
    }
    os << ',' << std::setw(6) << "match" << ',' << std::setw(kWidth) << "mf_formula" << '\n';
    for (const auto& r : rows) {
        os << std::setw(3) << r.n;
        for (auto v : values(r.closed)) os << ',' << std::setw(kWidth) << v;
        for (auto v : values(r.brute)) os << ',' << std::setw(kWidth) << v;
        os << ',' << std::setw(6) << (r.match ? "true" : "false") << ',' << std::setw(kWidth)
           << (r.mf_formula_applies ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string EnumReport::to_plain() const {
    std::ostringstream os;
    os << std::setw(3) << "n";
    for (const char* f : kFields) os << std::setw(16) << f;
    os << "  status\n";
    bool footnote = false;
    for (const auto& r : rows) {
        os << std::setw(3) << r.n;
        const auto closed = values(r.closed);
        const auto brute = values(r.brute);
        for (std::size_t i = 0; i < closed.size(); ++i) {
            std::string cell = std::to_string(closed[i]) + "/" + std::to_string(brute[i]);
            if (i + 1 == closed.size() && !r.mf_formula_applies) {
                cell += "*";
                footnote = true;
            }
            os << std::setw(16) << cell;
        }
        os << "  " << (r.match ? "ok" : "MISMATCH") << '\n';
    }
    os << "cells are closed/brute";
    if (footnote) os << "; * mf formula applies only for n > 1, closed value shown as 0";
    os << '\n';
    return os.str();
}

EnumReport verify(std::uint32_t n_max, const CensusOptions& options) {
    if (n_max > options.cap) throw CapExceeded(n_max, options.cap);
    EnumReport report;
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        EnumRow row;
        row.n = n;
        row.closed = closed_form_counts(n);
        row.brute = brute_force_census(n, options);
        row.match = row.closed == row.brute;
        row.mf_formula_applies = n >= 2;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace sturm
