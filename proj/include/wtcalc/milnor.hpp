#pragma once

#include <map>
#include <string>
#include <vector>

#include "wtcalc/freeword.hpp"
#include "wtcalc/liealg.hpp"

namespace wtcalc {

/* Power series in noncommuting variables X_1..X_m, truncated by total degree.
   Keys are index words; the empty word is the constant term. Zero
   coefficients are never stored. */
using Series = std::map<Word, Int>;

Series series_mul(const Series& a, const Series& b, int max_degree);

// x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ..., truncated past max_degree
Series magnus(const FreeWord& w, int max_degree);

struct StringLinkData {
    int strands = 0;
    std::vector<FreeWord> longitudes;  // one per strand, words in x_1..x_strands
};

// coefficient of X_{i_1}..X_{i_{k-1}} in the expansion of longitude i_k;
// the multi-index needs at least two entries
Int milnor_mu(const StringLinkData& link, const std::vector<int>& multi_index);

/* First nonvanishing obstruction of a string link, as an element of the
   bracket kernel in degree order+1. Requires every invariant of lower order
   to vanish, the leading coefficients of each longitude to form a bracket
   expression, and the total to satisfy the cycle condition. */
struct TotalMilnor {
    int order = 0;
    int strands = 0;
    std::vector<LieElement> longitude_parts;  // per strand, degree order+1
    std::vector<TensorTerm> value;            // sum of X_j (x) parts
    bool zero() const;
};

TotalMilnor total_milnor(const StringLinkData& link, int order);

// image of the order+1 obstruction under the halving map; order must be odd
std::vector<RootedPtr> sato_levine(const StringLinkData& link, int order);

}  // namespace wtcalc
