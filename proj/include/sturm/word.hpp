#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sturm {

enum class Letter : char { a = 'a', b = 'b' };

constexpr Letter other(Letter c) noexcept {
    return c == Letter::a ? Letter::b : Letter::a;
}

constexpr char to_char(Letter c) noexcept { return static_cast<char>(c); }

/**
 * An immutable finite word over the alphabet {a, b}.
 *
 * The canonical text form is the ASCII string over 'a' and 'b'; the empty
 * string is the empty word. Positions are 1-based through letter(), matching
 * the usual w[1]..w[n] convention; iteration and str() expose the letters
 * in order.
 */
class Word {
public:
    Word() = default;

    // Throws std::invalid_argument on any character other than 'a' or 'b'.
    explicit Word(std::string_view text);
    explicit Word(const std::vector<Letter>& letters);

    static Word parse(std::string_view text) { return Word(text); }

    // Bit i of `bits` selects letter i+1 (0 -> a, 1 -> b). Used by the
    // exhaustive scans over all words of a given length.
    static Word from_bits(std::uint64_t bits, std::size_t length);

    static Word repeat(Letter c, std::size_t count);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    // 1-based; throws std::out_of_range outside 1..size().
    Letter letter(std::size_t i) const;
    Letter front() const;
    Letter back() const;

    std::string_view str() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    // 0-based contiguous factor starting at `pos`; throws std::out_of_range.
    Word substr(std::size_t pos, std::size_t length) const;
    Word prefix(std::size_t length) const { return substr(0, length); }
    Word suffix(std::size_t length) const;
    Word drop_first() const;
    Word drop_last() const;
    // Maximal internal factor: first and last letters removed. Requires size() >= 2.
    Word interior() const;

    Word power(std::size_t k) const;

    friend Word operator+(const Word& u, const Word& v);
    friend Word operator+(Letter x, const Word& w);
    friend Word operator+(const Word& w, Letter y);

    friend bool operator==(const Word&, const Word&) = default;
    // Lexicographic with a < b; shorter-prefix-first.
    friend std::strong_ordering operator<=>(const Word& u, const Word& v) noexcept {
        return u.letters_.compare(v.letters_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Word& w) {
        return os << w.letters_;
    }

private:
    struct Raw {};
    Word(Raw, std::string s) : letters_(std::move(s)) {}

    std::string letters_;
};

Word operator""_w(const char* text, std::size_t length);

Word reverse(const Word& w);
bool is_palindrome(const Word& w);
std::size_t count_letter(const Word& w, Letter c);

// All p in 1..|w|+1 with w[i] = w[i+p] for i = 1..|w|-p. Values |w| and
// |w|+1 always qualify. Throws std::invalid_argument on the empty word.
std::vector<std::size_t> periods(const Word& w);
bool has_period(const Word& w, std::size_t p);

// Distinct factors of the given length; throws std::out_of_range if length > |w|.
std::set<Word> factors(const Word& w, std::size_t length);

Word longest_palindromic_suffix(const Word& w);
Word longest_palindromic_prefix(const Word& w);

// Shortest palindrome having w as a prefix (right) or as a suffix (left).
Word right_palindromic_closure(const Word& w);
Word left_palindromic_closure(const Word& w);

// Throws std::invalid_argument on the empty word.
bool is_primitive_word(const Word& w);

}  // namespace sturm
