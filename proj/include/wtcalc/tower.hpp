#pragma once

#include <map>
#include <string>
#include <vector>

#include "wtcalc/abelian.hpp"
#include "wtcalc/trees.hpp"

namespace wtcalc {

/* Three nested quotients of the span of glued trees in one order:
   plain      vertex transposition and edge exchange relations only
   reduced    plain plus, in odd orders, the framing corrections
   twisted    reduced plus boundary twists (odd orders), or, in even
              orders, extra twist generators with their own relations */
enum class TowerFlavor { plain, reduced, twisted };

struct TowerGroup {
    int order = 0;
    int m = 0;
    TowerFlavor flavor = TowerFlavor::plain;
    std::vector<UnrootedTree> trees;
    std::vector<RootedPtr> twists;  // canonical rooted; even twisted only
    IntMatrix relators;
    PresentedGroup group{0, IntMatrix{}};

    std::size_t gens() const { return trees.size() + twists.size(); }

    // signed unit coordinates of the class of a glued pair
    std::vector<Int> tree_coords(const RootedPtr& a, const RootedPtr& b) const;
    std::vector<Int> tree_coords(const UnrootedTree& t) const;
    // unit coordinates of a twist generator; orientation is quotiented away
    std::vector<Int> twist_coords(const RootedPtr& j) const;

    std::map<std::string, std::size_t> tree_col;   // format(tree) -> column
    std::map<std::string, std::size_t> twist_col;  // format(rooted) -> column
};

// memoized; the reference stays valid for the process lifetime
const TowerGroup& tower_group(int order, int m, TowerFlavor flavor);

// framing correction of a tree of order k: the sum over leaf cuts (l, C)
// of <l,(C,C)>, expressed in a tower of order 2k+1
std::vector<Int> delta_coords(const UnrootedTree& t, const TowerGroup& target);

}  // namespace wtcalc
