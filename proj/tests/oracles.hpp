#pragma once

// Reference implementations used only by the tests. They work on plain
// std::string and follow the textbook definitions as literally as possible,
// sharing no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<std::string> all_words(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::string s(n, 'a');
        for (std::size_t i = 0; i < n; ++i) {
            if ((bits >> (n - 1 - i)) & 1U) s[i] = 'b';
        }
        out.push_back(std::move(s));
    }
    return out;
}

inline std::string reversed(std::string s) {
    std::reverse(s.begin(), s.end());
    return s;
}

inline bool palindrome(const std::string& s) { return reversed(s) == s; }

// Any two factors of equal length have a-counts differing by at most one,
// comparing every pair of factors.
inline bool balanced(const std::string& w) {
    for (std::size_t k = 1; k <= w.size(); ++k) {
        std::set<std::string> fs;
        for (std::size_t i = 0; i + k <= w.size(); ++i) fs.insert(w.substr(i, k));
        for (const auto& u : fs) {
            for (const auto& v : fs) {
                const auto cu = std::count(u.begin(), u.end(), 'a');
                const auto cv = std::count(v.begin(), v.end(), 'a');
                if (cu - cv > 1) return false;
            }
        }
    }
    return true;
}

inline std::vector<std::size_t> periods(const std::string& w) {
    std::vector<std::size_t> out;
    for (std::size_t p = 1; p <= w.size() + 1; ++p) {
        bool ok = true;
        for (std::size_t i = 1; i + p <= w.size(); ++i) {
            if (w[i - 1] != w[i + p - 1]) ok = false;
        }
        if (ok) out.push_back(p);
    }
    return out;
}

// Shortest palindrome with prefix w, found by trying every length upward.
inline std::string shortest_palindrome_with_prefix(const std::string& w) {
    for (std::size_t len = w.size();; ++len) {
        std::string cand(len, '?');
        bool ok = true;
        for (std::size_t i = 0; i < len && ok; ++i) {
            const char mirror_src = (len - 1 - i) < w.size() ? w[len - 1 - i] : '?';
            const char own = i < w.size() ? w[i] : '?';
            if (own != '?' && mirror_src != '?' && own != mirror_src) ok = false;
            cand[i] = own != '?' ? own : mirror_src;
        }
        if (ok && cand.find('?') == std::string::npos && palindrome(cand)) return cand;
    }
}

// w = u^k for some shorter u and k >= 2.
inline bool proper_power(const std::string& w) {
    for (std::size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d != 0) continue;
        std::string rep;
        while (rep.size() < w.size()) rep += w.substr(0, d);
        if (rep == w) return true;
    }
    return false;
}

inline std::uint64_t totient_by_gcd(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) ++c;
    }
    return c;
}

// Lower mechanical word of slope q/(p+q): letter i is b iff
// floor((i+1)q/n) > floor(i q/n). Christoffel words from the geometric
// side, independent of the residue comparison used by the library.
inline std::string lower_christoffel_geometric(std::uint32_t p, std::uint32_t q) {
    const std::uint64_t n = p + q;
    std::string s;
    for (std::uint64_t i = 0; i < n; ++i) s += ((i + 1) * q / n > i * q / n) ? 'b' : 'a';
    return s;
}

// Random factor of a long power of a primitive Christoffel word, which is
// always balanced.
inline std::string random_sturmian(std::mt19937& rng, std::size_t length) {
    std::uniform_int_distribution<std::uint32_t> pick(1, 40);
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    do {
        p = pick(rng);
        q = pick(rng);
    } while (std::gcd(p, q) != 1);
    const std::string root = lower_christoffel_geometric(p, q);
    std::string s;
    while (s.size() < length + root.size()) s += root;
    std::uniform_int_distribution<std::size_t> start(0, root.size() - 1);
    std::string out = s.substr(start(rng), length);
    if (std::bernoulli_distribution(0.5)(rng)) {
        for (char& c : out) c = c == 'a' ? 'b' : 'a';
    }
    return out;
}

}  // namespace oracle
