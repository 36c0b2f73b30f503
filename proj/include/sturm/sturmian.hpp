#pragma once

#include <string_view>

#include "sturm/word.hpp"

namespace sturm {

enum class SpecialTag {
    NotSturmian,
    NeitherSpecial,
    LeftSpecialOnly,
    RightSpecialOnly,
    NonStrictlyBispecial,
    StrictlyBispecial,
};

std::string_view to_string(SpecialTag tag) noexcept;

// Where a Sturmian word sits with respect to one-letter extensions.
// extension_count is |{(x, y) : xwy Sturmian}|, 0 for non-Sturmian words.
struct SpecialClass {
    SpecialTag tag = SpecialTag::NotSturmian;
    int extension_count = 0;

    bool is_sturmian() const noexcept { return tag != SpecialTag::NotSturmian; }
    bool is_left_special() const noexcept {
        return tag == SpecialTag::LeftSpecialOnly || is_bispecial();
    }
    bool is_right_special() const noexcept {
        return tag == SpecialTag::RightSpecialOnly || is_bispecial();
    }
    bool is_bispecial() const noexcept {
        return tag == SpecialTag::NonStrictlyBispecial || tag == SpecialTag::StrictlyBispecial;
    }

    friend bool operator==(const SpecialClass&, const SpecialClass&) = default;
};

// Balanced: for every window length, a-counts over windows differ by at most one.
bool is_sturmian(const Word& w);

bool is_left_special(const Word& w);
bool is_right_special(const Word& w);
int extension_count(const Word& w);

// Throws std::logic_error if the extension count disagrees with the special
// flags (that would mean the balance test is broken).
SpecialClass classify(const Word& w);

// Empty word, a unary power, or w = PxyQ = QyxP with P, Q palindromes.
bool is_central(const Word& w);
// Two coprime periods p, q (range 1..|w|+1) with p + q - 2 = |w|.
bool is_central_by_periods(const Word& w);

// k-th iterate of a -> ab, b -> a applied to the seed a.
Word fibonacci_prefix(unsigned k);

}  // namespace sturm
