#include "wtcalc/abelian.hpp"

#include <sstream>

namespace wtcalc {

std::string GroupStructure::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank == 1) {
        os << "Z";
        first = false;
    } else if (rank > 1) {
        os << "Z^" << rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

PresentedGroup::PresentedGroup(std::size_t gens, IntMatrix relators)
    : gens_(gens), relators_(std::move(relators)), snf_(smith_normal_form(relators_)) {
    if (relators_.cols() != gens_ && relators_.rows() != 0)
        throw validation_error("presentation: relator width != generator count");
    structure_.rank = gens_ - snf_.rank;
    for (std::size_t k = 0; k < snf_.rank; ++k) {
        const Int& d = snf_.s.at(k, k);
        if (d >= 2) structure_.torsion.push_back(d);
    }
}

std::vector<Int> PresentedGroup::canonical_coords(const std::vector<Int>& w) const {
    if (w.size() != gens_) throw validation_error("canonical_coords: length mismatch");
    // y = w * V; the row lattice of the relators becomes diagonal in y-space.
    std::vector<Int> y = row_times_matrix(w, snf_.v);
    for (std::size_t k = 0; k < snf_.rank; ++k) {
        const Int& d = snf_.s.at(k, k);
        Int r = y[k] % d;
        if (r < 0) r += d;
        y[k] = r;
    }
    return y;
}

bool PresentedGroup::is_zero(const std::vector<Int>& w) const {
    for (const Int& x : canonical_coords(w))
        if (x != 0) return false;
    return true;
}

bool PresentedGroup::equal(const std::vector<Int>& a, const std::vector<Int>& b) const {
    return canonical_coords(a) == canonical_coords(b);
}

PresentedGroup group_from_presentation(std::size_t gens, const IntMatrix& relators) {
    return PresentedGroup(gens, relators);
}

namespace {

// Lattice of domain rows x with x*map in the row span of the codomain
// relators, as a Hermite basis. Computed from the left kernel of the
// stacked matrix [map; relators].
IntMatrix preimage_lattice(const IntMatrix& map, const IntMatrix& codomain_relators,
                           std::size_t domain_gens) {
    IntMatrix stacked = map.vstack(codomain_relators);
    IntMatrix kern = left_kernel_rows(stacked);
    IntMatrix proj(kern.rows(), domain_gens);
    for (std::size_t i = 0; i < kern.rows(); ++i)
        for (std::size_t j = 0; j < domain_gens; ++j) proj.at(i, j) = kern.at(i, j);
    return hermite_rows(proj);
}

bool map_well_defined(const PresentedGroup& domain, const PresentedGroup& codomain,
                      const IntMatrix& map) {
    IntMatrix basis = hermite_rows(codomain.relators());
    for (std::size_t i = 0; i < domain.relators().rows(); ++i) {
        std::vector<Int> img = row_times_matrix(domain.relators().row(i), map);
        if (!solve_in_rowspace(img, basis)) return false;
    }
    return true;
}

}  // namespace

KernelPresentation kernel_presentation(const PresentedGroup& domain,
                                       const PresentedGroup& codomain, const IntMatrix& map) {
    if (map.rows() != domain.gens() || map.cols() != codomain.gens())
        throw validation_error("kernel_presentation: map shape mismatch");
    if (!map_well_defined(domain, codomain, map))
        throw validation_error("kernel_presentation: map not well defined on the presentation");

    IntMatrix p = preimage_lattice(map, codomain.relators(), domain.gens());
    // Kernel = P / rowspan(domain relators); each domain relator lies in P.
    IntMatrix c(domain.relators().rows(), p.rows());
    for (std::size_t i = 0; i < domain.relators().rows(); ++i) {
        auto coeff = solve_in_rowspace(domain.relators().row(i), p);
        if (!coeff) throw internal_error("kernel_presentation: relator escaped preimage lattice");
        c.set_row(i, *coeff);
    }
    return KernelPresentation{PresentedGroup(p.rows(), c), p};
}

HomReport hom_analysis(const PresentedGroup& domain, const PresentedGroup& codomain,
                       const IntMatrix& map) {
    if (map.rows() != domain.gens() || map.cols() != codomain.gens())
        throw validation_error("hom_analysis: map shape mismatch");
    HomReport rep;
    rep.well_defined = map_well_defined(domain, codomain, map);
    if (!rep.well_defined) return rep;

    rep.kernel = kernel_presentation(domain, codomain, map).group.structure();
    rep.cokernel =
        PresentedGroup(codomain.gens(), map.vstack(codomain.relators())).structure();
    rep.injective = rep.kernel.trivial();
    rep.surjective = rep.cokernel.trivial();
    rep.isomorphism = rep.injective && rep.surjective;
    return rep;
}

}  // namespace wtcalc
