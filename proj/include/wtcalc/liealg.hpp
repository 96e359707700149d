#pragma once

#include <map>
#include <vector>

#include "wtcalc/abelian.hpp"
#include "wtcalc/trees.hpp"

namespace wtcalc {

enum class LieFlavor { lie, quasi };

// number of basic commutators on m generators in the given bracket degree
Int witt_rank(int m, int degree);

// basic commutators of the given degree as binary trees over leaf labels
// 1..m, sorted; the returned reference stays valid (memoized)
const std::vector<RootedPtr>& hall_basis(int m, int degree);

struct TreeLess {
    bool operator()(const RootedPtr& a, const RootedPtr& b) const { return cmp(a, b) < 0; }
};

/* Homogeneous element in the basic-commutator basis. sq carries the mod 2
   coefficients of the classes [h,h], which survive in even degree under the
   quasi flavor; the lie flavor never populates it. */
struct LieElement {
    std::map<RootedPtr, Int, TreeLess> free;
    std::map<RootedPtr, Int, TreeLess> sq;

    bool zero() const { return free.empty() && sq.empty(); }
    bool operator==(const LieElement& o) const;
};

LieElement lie_unit(const RootedPtr& hall_tree);

// rewrite one formal bracket tree into basis coordinates
LieElement lie_reduce(const RootedPtr& t, LieFlavor flavor);

LieElement lie_add(const LieElement& a, const LieElement& b, const Int& scale = 1);
LieElement bracket(const LieElement& a, const LieElement& b, LieFlavor flavor);

// sequence of generator labels, a monomial in the free associative ring
using Word = std::vector<int>;

// image of a bracket tree under commutator expansion u v - v u
std::map<Word, Int> assoc_expand(const RootedPtr& t);

struct TensorGen {
    int x = 0;            // tensor factor label
    RootedPtr h;          // basic commutator
    bool squared = false; // generator stands for X_x (x) [h,h], order two
};

/* The degree n piece of the bracket map X (x) L_{n+1} -> L_{n+2} together
   with its exactly presented kernel. domain lists the tensor generators in
   coordinate order (plain ones first, squared ones after); matrix row i is
   the image of domain[i] over codomain_free then codomain_sq. */
struct BracketKernelData {
    int m = 0;
    int n = 0;
    LieFlavor flavor = LieFlavor::lie;
    std::vector<TensorGen> domain;
    std::vector<RootedPtr> codomain_free;
    std::vector<RootedPtr> codomain_sq;
    IntMatrix matrix;
    PresentedGroup domain_group;
    PresentedGroup codomain_group;
    KernelPresentation kernel;
};

BracketKernelData bracket_kernel(int m, int n, LieFlavor flavor);

struct TensorTerm {
    Int coeff;
    int x = 0;    // tensor factor label
    RootedPtr t;  // formal bracket tree, not necessarily basic
};

/* Torsion obstruction of an odd-degree cycle: for terms of tree degree
   2k+1 whose total bracket vanishes, the quasi flavor leaves a mod 2
   residue in degree k+1; returns its support over hall_basis(m, k+1).
   Rejects non-cycles and even tree degrees. */
std::vector<RootedPtr> sl_map(const std::vector<TensorTerm>& cycle, int m);

}  // namespace wtcalc
