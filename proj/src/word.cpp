#include "sturm/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace sturm {

Word::Word(std::string_view text) : letters_(text) {
    for (char c : letters_) {
        if (c != 'a' && c != 'b') {
            throw std::invalid_argument("word must contain only the letters a and b: \"" +
                                        std::string(text) + "\"");
        }
    }
}

Word::Word(const std::vector<Letter>& letters) {
    letters_.reserve(letters.size());
    for (Letter c : letters) letters_.push_back(to_char(c));
}

Word Word::from_bits(std::uint64_t bits, std::size_t length) {
    if (length > 64) throw std::invalid_argument("from_bits supports at most 64 letters");
    std::string s(length, 'a');
    for (std::size_t i = 0; i < length; ++i) {
        if ((bits >> i) & 1U) s[i] = 'b';
    }
    return Word(Raw{}, std::move(s));
}

Word Word::repeat(Letter c, std::size_t count) {
    return Word(Raw{}, std::string(count, to_char(c)));
}

Letter Word::letter(std::size_t i) const {
    if (i == 0 || i > letters_.size()) {
        throw std::out_of_range("letter index " + std::to_string(i) + " outside 1.." +
                                std::to_string(letters_.size()));
    }
    return static_cast<Letter>(letters_[i - 1]);
}

Letter Word::front() const { return letter(1); }
Letter Word::back() const { return letter(size()); }

Word Word::substr(std::size_t pos, std::size_t length) const {
    if (pos > size() || length > size() - pos) {
        throw std::out_of_range("factor out of range");
    }
    return Word(Raw{}, letters_.substr(pos, length));
}

Word Word::suffix(std::size_t length) const {
    if (length > size()) throw std::out_of_range("suffix longer than word");
    return substr(size() - length, length);
}

Word Word::drop_first() const {
    if (empty()) throw std::out_of_range("drop_first on the empty word");
    return substr(1, size() - 1);
}

Word Word::drop_last() const {
    if (empty()) throw std::out_of_range("drop_last on the empty word");
    return substr(0, size() - 1);
}

Word Word::interior() const {
    if (size() < 2) throw std::out_of_range("interior needs a word of length at least 2");
    return substr(1, size() - 2);
}

Word Word::power(std::size_t k) const {
    std::string s;
    s.reserve(size() * k);
    for (std::size_t i = 0; i < k; ++i) s += letters_;
    return Word(Raw{}, std::move(s));
}

Word operator+(const Word& u, const Word& v) { return Word(Word::Raw{}, u.letters_ + v.letters_); }

Word operator+(Letter x, const Word& w) { return Word(Word::Raw{}, to_char(x) + w.letters_); }

Word operator+(const Word& w, Letter y) { return Word(Word::Raw{}, w.letters_ + to_char(y)); }

Word operator""_w(const char* text, std::size_t length) {
    return Word(std::string_view(text, length));
}

Word reverse(const Word& w) {
    std::string s(w.str());
    std::reverse(s.begin(), s.end());
    return Word(s);
}

namespace {

bool is_palindrome(std::string_view s) {
    for (std::size_t i = 0, j = s.size(); i + 1 < j; ++i, --j) {
        if (s[i] != s[j - 1]) return false;
    }
    return true;
}

}  // namespace

bool is_palindrome(const Word& w) { return is_palindrome(w.str()); }

std::size_t count_letter(const Word& w, Letter c) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), to_char(c)));
}

bool has_period(const Word& w, std::size_t p) {
    if (p == 0) return false;
    const auto s = w.str();
    for (std::size_t i = 0; i + p < s.size(); ++i) {
        if (s[i] != s[i + p]) return false;
    }
    return true;
}

std::vector<std::size_t> periods(const Word& w) {
    if (w.empty()) throw std::invalid_argument("periods of the empty word are undefined");
    std::vector<std::size_t> out;
    for (std::size_t p = 1; p <= w.size() + 1; ++p) {
        if (has_period(w, p)) out.push_back(p);
    }
    return out;
}

std::set<Word> factors(const Word& w, std::size_t length) {
    if (length > w.size()) throw std::out_of_range("factor length exceeds word length");
    std::set<Word> out;
    for (std::size_t i = 0; i + length <= w.size(); ++i) out.insert(w.substr(i, length));
    return out;
}

Word longest_palindromic_suffix(const Word& w) {
    const auto s = w.str();
    for (std::size_t len = s.size(); len > 0; --len) {
        if (is_palindrome(s.substr(s.size() - len))) return w.suffix(len);
    }
    return Word{};
}

Word longest_palindromic_prefix(const Word& w) {
    const auto s = w.str();
    for (std::size_t len = s.size(); len > 0; --len) {
        if (is_palindrome(s.substr(0, len))) return w.prefix(len);
    }
    return Word{};
}

Word right_palindromic_closure(const Word& w) {
    // w = uv with v the longest palindromic suffix; closure is w·reverse(u).
    const auto v = longest_palindromic_suffix(w);
    return w + reverse(w.prefix(w.size() - v.size()));
}

Word left_palindromic_closure(const Word& w) {
    // w = uv with u the longest palindromic prefix; closure is reverse(v)·w.
    const auto u = longest_palindromic_prefix(w);
    return reverse(w.suffix(w.size() - u.size())) + w;
}

bool is_primitive_word(const Word& w) {
    if (w.empty()) throw std::invalid_argument("primitivity of the empty word is undefined");
    // w is a proper power iff it has a period d < |w| dividing |w|.
    const auto n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d == 0 && has_period(w, d)) return false;
    }
    return true;
}

}  // namespace sturm
