#pragma once

#include <optional>

#include "wtcalc/int_matrix.hpp"

namespace wtcalc {

// U * input * V == S, with U, V unimodular and S diagonal,
// diagonal entries nonnegative and each dividing the next.
struct SmithResult {
    IntMatrix u, s, v;
    std::size_t rank = 0;  // count of nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& m);

// Row echelon form over Z via unimodular row operations only.
// Returns the nonzero rows; they span the same row lattice as the input.
// Pivots are positive and strictly right of the pivot above; entries above
// each pivot are reduced into [0, pivot).
IntMatrix hermite_rows(const IntMatrix& m);

// Expresses target as an integer combination of the rows of basis
// (basis must be in hermite_rows form). Empty optional if impossible.
std::optional<std::vector<Int>> solve_in_rowspace(const std::vector<Int>& target,
                                                  const IntMatrix& basis);

// Expresses target as an integer combination of the rows of an arbitrary
// matrix m, returning one coefficient per row. Empty optional if impossible.
std::optional<std::vector<Int>> express_in_rows(const std::vector<Int>& target, const IntMatrix& m);

// Basis for { x : x * m == 0 }, one generator per row.
IntMatrix left_kernel_rows(const IntMatrix& m);

}  // namespace wtcalc
