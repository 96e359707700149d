#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wtcalc/int_matrix.hpp"

namespace wtcalc {

/* Binary labeled trees, immutable and shared. A leaf carries a label >= 1;
   an internal node is an ordered pair. order = number of internal nodes. */
struct RootedTree;
using RootedPtr = std::shared_ptr<const RootedTree>;

struct RootedTree {
    int label = 0;  // leaves only
    RootedPtr left, right;
    int order = 0;

    bool is_leaf() const { return !left; }
};

RootedPtr leaf(int label);
RootedPtr node(const RootedPtr& a, const RootedPtr& b);

// total order: by order, then leaf label, then (left, right) recursively
int cmp(const RootedPtr& a, const RootedPtr& b);

// children sorted ascending at every node; sign flips once per swap
std::pair<RootedPtr, int> canonical_rooted(const RootedPtr& t);

int max_label(const RootedPtr& t);

/* A pair of rooted trees with their roots glued. Stored canonically:
   among all ways of cutting the glued tree along an edge into two rooted
   halves, the stored pair is the best-balanced one, ties broken
   lexicographically, larger half first. Construct only via
   canonicalize/inner_product. */
struct UnrootedTree {
    RootedPtr first, second;

    int order() const { return first->order + second->order; }
};

int cmp(const UnrootedTree& a, const UnrootedTree& b);

// every edge of the glued tree as an ordered (subtree, complement) pair,
// orientation-faithful: <S,C> rebuilds the same oriented tree, 2*order+1 entries
std::vector<std::pair<RootedPtr, RootedPtr>> all_splits(const RootedPtr& i, const RootedPtr& j);

// one entry per labeled leaf: (label, complement rooted at that leaf's edge)
std::vector<std::pair<int, RootedPtr>> leaf_splits(const UnrootedTree& t);

std::pair<UnrootedTree, int> canonicalize(const RootedPtr& i, const RootedPtr& j);
std::pair<UnrootedTree, int> canonicalize(const UnrootedTree& t);
std::pair<UnrootedTree, int> inner_product(const RootedPtr& i, const RootedPtr& j);

// grammar: rooted = label | "(" rooted "," rooted ")"
//          unrooted = "<" rooted "," rooted ">", twisted = "tw(" rooted ")"
std::string format(const RootedPtr& t);
std::string format(const UnrootedTree& t);

struct TwistedGen {
    RootedPtr j;  // canonical rooted; the orientation sign is quotiented away
};
std::string format(const TwistedGen& t);

using ParsedTree = std::variant<RootedPtr, UnrootedTree, TwistedGen>;

// structural parse, no canonicalization; max_label <= m enforced when m > 0
ParsedTree parse_tree(const std::string& text, int m = 0);

// all rooted trees of the given order (every ordered shape and labeling)
std::vector<RootedPtr> enumerate_rooted(int order, int m);

// canonical representatives, deduplicated and sorted
std::vector<UnrootedTree> enumerate_trees(int order, int m);

enum class RelatorKind { antisymmetry, jacobi };

// rows over the enumerate_trees(order, m) coordinate index; zero rows dropped.
// antisymmetry: t + (one-vertex swap of t) per tree and vertex transposition.
// jacobi: t - H + X per tree and internal edge.
IntMatrix tree_relators(int order, int m, RelatorKind kind);

}  // namespace wtcalc
