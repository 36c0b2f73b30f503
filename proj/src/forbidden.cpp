#include "sturm/forbidden.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "sturm/sturmian.hpp"

namespace sturm {

bool is_minimal_forbidden(const Word& w) {
    if (w.empty()) throw std::invalid_argument("the empty word is never forbidden");
    // St is factorial, so every proper factor is Sturmian iff the two
    // maximal ones are.
    return !is_sturmian(w) && is_sturmian(w.drop_first()) && is_sturmian(w.drop_last());
}

std::vector<ForbiddenWitness> minimal_forbidden_structural(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("minimal forbidden words are enumerated for n > 1");
    std::vector<ForbiddenWitness> out;
    for (std::uint32_t p = 1; p < n; ++p) {
        const std::uint32_t q = n - p;
        if (std::gcd(p, q) == 1) continue;
        for (auto o : {Orientation::lower, Orientation::upper}) {
            const ChristoffelSpec spec{p, q, o};
            const Word c = christoffel_word(spec);
            const Word interior = c.interior();
            out.push_back({c.back() + interior + c.front(), spec, interior});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ForbiddenWitness& l, const ForbiddenWitness& r) { return l.word < r.word; });
    if (std::adjacent_find(out.begin(), out.end(), [](const auto& l, const auto& r) {
            return l.word == r.word;
        }) != out.end()) {
        throw std::logic_error("duplicate minimal forbidden witness");
    }
    return out;
}

std::set<Word> minimal_forbidden_oracle(std::uint32_t n, std::uint32_t cap) {
    if (n == 0) throw std::invalid_argument("minimal forbidden words have length at least 1");
    if (n > cap) throw CapExceeded(n, cap);
    std::set<Word> out;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Word w = Word::from_bits(bits, n);
        if (is_minimal_forbidden(w)) out.insert(std::move(w));
    }
    return out;
}

std::string witnesses_to_json(const std::vector<ForbiddenWitness>& witnesses) {
    auto arr = nlohmann::json::array();
    for (const auto& w : witnesses) {
        arr.push_back({{"word", std::string(w.word.str())},
                       {"p", w.christoffel.p},
                       {"q", w.christoffel.q},
                       {"orientation", std::string(to_string(w.christoffel.orientation))},
                       {"interior", std::string(w.interior.str())}});
    }
    return arr.dump(2);
}

}  // namespace sturm
