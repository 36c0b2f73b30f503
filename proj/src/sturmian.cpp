#include "sturm/sturmian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sturm {

std::string_view to_string(SpecialTag tag) noexcept {
    switch (tag) {
        case SpecialTag::NotSturmian: return "NotSturmian";
        case SpecialTag::NeitherSpecial: return "NeitherSpecial";
        case SpecialTag::LeftSpecialOnly: return "LeftSpecialOnly";
        case SpecialTag::RightSpecialOnly: return "RightSpecialOnly";
        case SpecialTag::NonStrictlyBispecial: return "NonStrictlyBispecial";
        case SpecialTag::StrictlyBispecial: return "StrictlyBispecial";
    }
    return "?";
}

bool is_sturmian(const Word& w) {
    const auto s = w.str();
    const std::size_t n = s.size();
    if (n < 3) return true;

    // prefix[i] = number of a's in s[0, i)
    std::vector<std::uint32_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + (s[i] == 'a' ? 1U : 0U);

    for (std::size_t k = 2; k < n; ++k) {
        std::uint32_t lo = prefix[k];
        std::uint32_t hi = lo;
        for (std::size_t i = 1; i + k <= n; ++i) {
            const std::uint32_t c = prefix[i + k] - prefix[i];
            lo = std::min(lo, c);
            hi = std::max(hi, c);
            if (hi - lo > 1) return false;
        }
    }
    return true;
}

bool is_left_special(const Word& w) {
    return is_sturmian(Letter::a + w) && is_sturmian(Letter::b + w);
}

bool is_right_special(const Word& w) {
    return is_sturmian(w + Letter::a) && is_sturmian(w + Letter::b);
}

int extension_count(const Word& w) {
    if (!is_sturmian(w)) return 0;
    int count = 0;
    for (Letter x : {Letter::a, Letter::b}) {
        for (Letter y : {Letter::a, Letter::b}) {
            if (is_sturmian(x + w + y)) ++count;
        }
    }
    return count;
}

SpecialClass classify(const Word& w) {
    if (!is_sturmian(w)) return {SpecialTag::NotSturmian, 0};

    const bool left = is_left_special(w);
    const bool right = is_right_special(w);
    const int count = extension_count(w);

    SpecialTag tag = SpecialTag::NeitherSpecial;
    int expected = 1;
    if (left && right) {
        tag = count == 4 ? SpecialTag::StrictlyBispecial : SpecialTag::NonStrictlyBispecial;
        expected = count == 4 ? 4 : 3;
    } else if (left) {
        tag = SpecialTag::LeftSpecialOnly;
        expected = 2;
    } else if (right) {
        tag = SpecialTag::RightSpecialOnly;
        expected = 2;
    }
    if (count != expected) {
        throw std::logic_error("inconsistent classification of " + std::string(w.str()) +
                               ": " + std::string(to_string(tag)) + " with " +
                               std::to_string(count) + " extensions");
    }
    return {tag, count};
}

bool is_central(const Word& w) {
    const auto s = w.str();
    const std::size_t n = s.size();
    if (std::all_of(s.begin(), s.end(), [&](char c) { return c == s.front(); })) return true;

    auto palindrome = [](std::string_view t) {
        return std::equal(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2),
                          t.rbegin());
    };
    // w = P x y Q with |P| = i, and the same word must read Q y x P.
    for (std::size_t i = 0; i + 2 <= n; ++i) {
        const char x = s[i];
        const char y = s[i + 1];
        if (x == y) continue;
        const auto p = s.substr(0, i);
        const auto q = s.substr(i + 2);
        if (!palindrome(p) || !palindrome(q)) continue;
        const std::size_t j = q.size();
        if (s.substr(0, j) == q && s[j] == y && s[j + 1] == x && s.substr(j + 2) == p) {
            return true;
        }
    }
    return false;
}

bool is_central_by_periods(const Word& w) {
    if (w.empty()) return true;
    const auto ps = periods(w);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (ps[i] + ps[j] == w.size() + 2 && std::gcd(ps[i], ps[j]) == 1) return true;
        }
    }
    return false;
}

Word fibonacci_prefix(unsigned k) {
    std::string cur = "a";
    for (unsigned step = 0; step < k; ++step) {
        std::string next;
        next.reserve(cur.size() * 2);
        for (char c : cur) next += (c == 'a') ? "ab" : "a";
        cur = std::move(next);
    }
    return Word(cur);
}

}  // namespace sturm
