#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "sturm/word.hpp"

namespace sturm {

enum class Orientation { lower, upper };

std::string_view to_string(Orientation o) noexcept;
// Accepts "lower" / "upper"; throws std::invalid_argument otherwise.
Orientation parse_orientation(std::string_view text);

// Digital approximation of the segment (0,0)-(p,q): p horizontal steps (a)
// and q vertical steps (b), from below (lower) or from above (upper).
struct ChristoffelSpec {
    std::uint32_t p = 1;
    std::uint32_t q = 1;
    Orientation orientation = Orientation::lower;

    std::uint32_t length() const noexcept { return p + q; }

    friend bool operator==(const ChristoffelSpec&, const ChristoffelSpec&) = default;
};

// Throws std::invalid_argument unless p >= 1 and q >= 1.
Word lower_christoffel(std::uint32_t p, std::uint32_t q);
Word upper_christoffel(std::uint32_t p, std::uint32_t q);
Word christoffel_word(const ChristoffelSpec& spec);

std::optional<ChristoffelSpec> recognize_christoffel(const Word& w);

bool is_primitive_christoffel(const ChristoffelSpec& spec);

// Witness that w = (u y x)^n u for a central word u, i.e. that x w y is a
// Christoffel word whose primitive root has interior u.
struct Decomposition {
    Word u;
    Letter x = Letter::a;
    Letter y = Letter::b;
    std::uint32_t n = 0;

    Word reconstruct() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// One entry per (x, y), x != y, with x w y Christoffel; (a, b) first.
// Empty iff w is not a bispecial Sturmian word.
std::vector<Decomposition> decompose_bispecial(const Word& w);

// Maximal internal factors of all Christoffel words of length n + 2.
std::set<Word> bispecial_words(std::uint32_t n);

// Palindromic interiors of the primitive Christoffel words of length n + 2.
std::set<Word> central_words(std::uint32_t n);

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticePath {
    std::vector<LatticePoint> points;

    const LatticePoint& end() const { return points.back(); }
};

// a steps by (1,0), b steps by (0,1), starting at the origin.
LatticePath lattice_path(const Word& w);

}  // namespace sturm
