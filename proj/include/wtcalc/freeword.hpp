#pragma once

#include <string>
#include <vector>

#include "wtcalc/bigint.hpp"

namespace wtcalc {

/* Reduced word in a free group: letters are generator indices, negated for
   inverses. Constructors and operations keep words freely reduced. */
struct FreeWord {
    std::vector<int> letters;

    bool operator==(const FreeWord&) const = default;
    bool empty() const { return letters.empty(); }
};

FreeWord word_reduce(std::vector<int> letters);
FreeWord word_mul(const FreeWord& a, const FreeWord& b);
FreeWord word_inverse(const FreeWord& w);
// a b a^-1 b^-1
FreeWord word_commutator(const FreeWord& a, const FreeWord& b);
// a b a^-1
FreeWord word_conjugate(const FreeWord& a, const FreeWord& b);

Int exponent_sum(const FreeWord& w, int gen);
int max_generator(const FreeWord& w);

// replace generator i by images[i-1] throughout
FreeWord word_substitute(const FreeWord& w, const std::vector<FreeWord>& images);

// grammar: term*, term = atom (^int)?, atom = xN | [word,word] | (word);
// labels stay within 1..m when m > 0
FreeWord parse_word(const std::string& text, int m = 0);

// inverse of parse_word up to power grouping; empty word prints as "1"
std::string format_word(const FreeWord& w);

}  // namespace wtcalc
