#pragma once

#include <string>
#include <vector>

#include "wtcalc/milnor.hpp"
#include "wtcalc/trees.hpp"

namespace wtcalc {

/* Braid word on a fixed strand count: letter +k (resp. -k) is the positive
   (negative) elementary crossing of positions k and k+1. Words are kept
   verbatim; no cancellation happens. */
struct Braid {
    int strands = 0;
    std::vector<int> letters;

    bool operator==(const Braid&) const = default;
};

Braid braid_mul(const Braid& a, const Braid& b);
Braid braid_inverse(const Braid& b);
// a b a^-1 b^-1
Braid braid_commutator(const Braid& a, const Braid& b);

// takes strand i once around strand j, i < j:
// (s_{j-1} .. s_{i+1}) s_i^2 (s_{i+1}^-1 .. s_{j-1}^-1)
Braid band_generator(int i, int j, int strands);

// grammar: term*, term = atom (^int)?,
//          atom = s<k> | A(i,j) | [expr,expr] | (expr)
Braid parse_braid(const std::string& text, int strands);
std::string format_braid(const Braid& b);

// final arrangement: entry p-1 is the strand ending at position p
std::vector<int> braid_permutation(const Braid& b);
bool is_pure(const Braid& b);

/* Longitudes of a pure braid: the word conjugating x_s to its image under
   the braid action, normalized to the 0-framing convention (total exponent
   0 in x_s). */
StringLinkData braid_longitudes(const Braid& b);

/* Braid action on the free group generated by the meridians x_1..x_strands.
   Composition follows word order:
   artin_rep(braid_mul(u, v)) == artin_compose(artin_rep(u), artin_rep(v)). */
struct ArtinAction {
    int strands = 0;
    std::vector<FreeWord> images;  // images[i-1] = image of x_i
};

ArtinAction artin_rep(const Braid& b);
ArtinAction artin_compose(const ArtinAction& first, const ArtinAction& then);
FreeWord artin_apply(const ArtinAction& a, const FreeWord& w);

/* Pure braid whose closure realizes the given tree as its leading
   obstruction: cut at the largest leaf label and turn the complement into
   nested commutators of band generators. Leaf labels must be pairwise
   distinct; strands defaults to the largest label. The construction
   recomputes the obstruction of the result and insists it matches the
   leaf-sum expansion of the tree up to one overall sign. */
Braid realize_tree(const UnrootedTree& t, int strands = 0);

}  // namespace wtcalc
