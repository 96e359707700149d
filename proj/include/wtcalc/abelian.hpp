#pragma once

#include <string>

#include "wtcalc/smith.hpp"

namespace wtcalc {

// Isomorphism type of a finitely generated abelian group:
// Z^rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
struct GroupStructure {
    std::size_t rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const GroupStructure& o) const = default;
    std::string to_string() const;
};

// Z^gens modulo the row span of a relator matrix. Elements are integer
// coefficient rows of length gens; comparisons happen in Smith coordinates.
class PresentedGroup {
public:
    PresentedGroup(std::size_t gens, IntMatrix relators);

    std::size_t gens() const { return gens_; }
    const IntMatrix& relators() const { return relators_; }
    const GroupStructure& structure() const { return structure_; }

    // Unique representative of the coset of w.
    std::vector<Int> canonical_coords(const std::vector<Int>& w) const;
    bool is_zero(const std::vector<Int>& w) const;
    bool equal(const std::vector<Int>& a, const std::vector<Int>& b) const;

private:
    std::size_t gens_;
    IntMatrix relators_;
    SmithResult snf_;
    GroupStructure structure_;
};

PresentedGroup group_from_presentation(std::size_t gens, const IntMatrix& relators);

// A homomorphism between presented groups, given on generators: row i of the
// matrix is the image of domain generator i in codomain generator coordinates.
struct HomReport {
    bool well_defined = false;
    GroupStructure kernel;
    GroupStructure cokernel;
    bool injective = false;
    bool surjective = false;
    bool isomorphism = false;
};

HomReport hom_analysis(const PresentedGroup& domain, const PresentedGroup& codomain,
                       const IntMatrix& map);

// The kernel of the induced map, with its generators expressed as elements of
// the domain (rows of generators_in_domain, length domain.gens()).
struct KernelPresentation {
    PresentedGroup group;
    IntMatrix generators_in_domain;
};

KernelPresentation kernel_presentation(const PresentedGroup& domain,
                                       const PresentedGroup& codomain, const IntMatrix& map);

}  // namespace wtcalc
