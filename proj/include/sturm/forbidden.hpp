#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sturm/christoffel.hpp"
#include "sturm/enumeration.hpp"
#include "sturm/word.hpp"

namespace sturm {

// A minimal forbidden word y w x together with the non-primitive
// Christoffel word x w y it is obtained from.
struct ForbiddenWitness {
    Word word;
    ChristoffelSpec christoffel;
    Word interior;

    friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

// Not Sturmian, while both maximal proper factors are. Throws
// std::invalid_argument on the empty word.
bool is_minimal_forbidden(const Word& w);

// Swap the end letters of every non-primitive Christoffel word of length n.
// Sorted by word. Throws std::invalid_argument for n < 2.
std::vector<ForbiddenWitness> minimal_forbidden_structural(std::uint32_t n);

// Exhaustive scan of all 2^n words. Throws CapExceeded above `cap` and
// std::invalid_argument for n = 0.
std::set<Word> minimal_forbidden_oracle(std::uint32_t n, std::uint32_t cap = kDefaultBruteCap);

// JSON array of {word, p, q, orientation, interior}.
std::string witnesses_to_json(const std::vector<ForbiddenWitness>& witnesses);

}  // namespace sturm
