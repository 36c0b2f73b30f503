#include "sturm/christoffel.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sturm {

std::string_view to_string(Orientation o) noexcept {
    return o == Orientation::lower ? "lower" : "upper";
}

Orientation parse_orientation(std::string_view text) {
    if (text == "lower") return Orientation::lower;
    if (text == "upper") return Orientation::upper;
    throw std::invalid_argument("orientation must be lower or upper, got \"" +
                                std::string(text) + "\"");
}

namespace {

void require_positive(std::uint32_t p, std::uint32_t q) {
    if (p == 0 || q == 0) throw std::invalid_argument("p and q must be positive");
}

// Letter i is decided by comparing consecutive residues of i*step mod n.
// For coprime (p, q) and 0 < i < n the residues never repeat, so the strict
// comparison is total. `rising` is the letter emitted on an increase.
std::string primitive_word(std::uint32_t n, std::uint32_t step, char rising, char falling) {
    std::string s(n, rising);
    std::uint64_t prev = 0;
    for (std::uint32_t i = 1; i <= n; ++i) {
        const std::uint64_t cur = (static_cast<std::uint64_t>(i) * step) % n;
        s[i - 1] = cur > prev ? rising : falling;
        prev = cur;
    }
    return s;
}

// The non-coprime case is the r-th power of the coprime one, r = gcd(p, q).
Word christoffel(std::uint32_t p, std::uint32_t q, Orientation o) {
    require_positive(p, q);
    const std::uint32_t r = std::gcd(p, q);
    const std::uint32_t p0 = p / r;
    const std::uint32_t q0 = q / r;
    const std::uint32_t n0 = p0 + q0;
    const std::string root = o == Orientation::lower ? primitive_word(n0, q0, 'a', 'b')
                                                     : primitive_word(n0, p0, 'b', 'a');
    return Word(root).power(r);
}

}  // namespace

Word lower_christoffel(std::uint32_t p, std::uint32_t q) {
    return christoffel(p, q, Orientation::lower);
}

Word upper_christoffel(std::uint32_t p, std::uint32_t q) {
    return christoffel(p, q, Orientation::upper);
}

Word christoffel_word(const ChristoffelSpec& spec) {
    return christoffel(spec.p, spec.q, spec.orientation);
}

std::optional<ChristoffelSpec> recognize_christoffel(const Word& w) {
    const auto p = static_cast<std::uint32_t>(count_letter(w, Letter::a));
    const auto q = static_cast<std::uint32_t>(count_letter(w, Letter::b));
    if (p == 0 || q == 0) return std::nullopt;
    // Lower words start with a and upper words with b, so at most one matches.
    const auto o = w.front() == Letter::a ? Orientation::lower : Orientation::upper;
    if (christoffel(p, q, o) == w) return ChristoffelSpec{p, q, o};
    return std::nullopt;
}

bool is_primitive_christoffel(const ChristoffelSpec& spec) {
    require_positive(spec.p, spec.q);
    return std::gcd(spec.p, spec.q) == 1;
}

Word Decomposition::reconstruct() const {
    return ((u + y) + x).power(n) + u;
}

std::vector<Decomposition> decompose_bispecial(const Word& w) {
    std::vector<Decomposition> out;
    for (Letter x : {Letter::a, Letter::b}) {
        const Letter y = other(x);
        const auto spec = recognize_christoffel(x + w + y);
        if (!spec) continue;
        const std::uint32_t r = std::gcd(spec->p, spec->q);
        const Word root = christoffel(spec->p / r, spec->q / r, spec->orientation);
        Decomposition d{root.interior(), x, y, r - 1};
        if (d.reconstruct() != w) {
            throw std::logic_error("decomposition does not reconstruct " + std::string(w.str()));
        }
        out.push_back(std::move(d));
    }
    return out;
}

std::set<Word> bispecial_words(std::uint32_t n) {
    std::set<Word> out;
    const std::uint32_t length = n + 2;
    for (std::uint32_t p = 1; p < length; ++p) {
        const std::uint32_t q = length - p;
        out.insert(lower_christoffel(p, q).interior());
        out.insert(upper_christoffel(p, q).interior());
    }
    return out;
}

std::set<Word> central_words(std::uint32_t n) {
    std::set<Word> out;
    const std::uint32_t length = n + 2;
    for (std::uint32_t p = 1; p < length; ++p) {
        if (std::gcd(p, length - p) == 1) out.insert(lower_christoffel(p, length - p).interior());
    }
    return out;
}

LatticePath lattice_path(const Word& w) {
    LatticePath path;
    path.points.reserve(w.size() + 1);
    LatticePoint cur;
    path.points.push_back(cur);
    for (char c : w) {
        if (c == 'a') {
            ++cur.x;
        } else {
            ++cur.y;
        }
        path.points.push_back(cur);
    }
    return path;
}

}  // namespace sturm
