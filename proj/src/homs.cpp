#include "wtcalc/homs.hpp"

#include <map>
#include <tuple>
#include <utility>

namespace wtcalc {

namespace {

using DomainIndex = std::map<std::tuple<int, std::string, bool>, std::size_t>;

DomainIndex index_domain(const BracketKernelData& data) {
    DomainIndex out;
    for (std::size_t i = 0; i < data.domain.size(); ++i) {
        const TensorGen& g = data.domain[i];
        out.emplace(std::make_tuple(g.x, format(g.h), g.squared), i);
    }
    return out;
}

// sum over leaf cuts of a glued pair, accumulated into domain coordinates
void accumulate_leaf_sum(const UnrootedTree& t, const BracketKernelData& data,
                         const DomainIndex& index, std::vector<Int>& out, const Int& scale) {
    for (const auto& [l, c] : leaf_splits(t)) {
        LieElement e = lie_reduce(c, data.flavor);
        for (const auto& [h, v] : e.free)
            out[index.at(std::make_tuple(l, format(h), false))] += scale * v;
        for (const auto& [h, v] : e.sq)
            out[index.at(std::make_tuple(l, format(h), true))] += scale * v;
    }
}

}  // namespace

std::vector<Int> eta_tensor(const TowerGroup& src, std::size_t gen_index,
                            const BracketKernelData& target) {
    DomainIndex index = index_domain(target);
    std::vector<Int> out(target.domain.size());
    if (gen_index < src.trees.size()) {
        accumulate_leaf_sum(src.trees[gen_index], target, index, out, 1);
        return out;
    }
    const RootedPtr& j = src.twists.at(gen_index - src.trees.size());
    accumulate_leaf_sum(UnrootedTree{j, j}, target, index, out, 1);
    for (Int& v : out) {
        if (v % 2 != 0) throw internal_error("interior pairing with an odd coefficient");
        v /= 2;
    }
    return out;
}

EtaMap eta_map(int n, int m, bool twisted) {
    const TowerGroup& src =
        tower_group(n, m, twisted ? TowerFlavor::twisted : TowerFlavor::plain);
    BracketKernelData data =
        bracket_kernel(m, n, twisted ? LieFlavor::lie : LieFlavor::quasi);

    IntMatrix mat(src.gens(), data.kernel.group.gens());
    for (std::size_t g = 0; g < src.gens(); ++g) {
        std::vector<Int> tensor = eta_tensor(src, g, data);
        auto coords = solve_in_rowspace(tensor, data.kernel.generators_in_domain);
        if (!coords) throw internal_error("leaf-sum image escapes the bracket kernel");
        for (std::size_t c = 0; c < coords->size(); ++c) mat.at(g, c) = (*coords)[c];
    }

    EtaMap out;
    out.n = n;
    out.m = m;
    out.twisted = twisted;
    out.report = hom_analysis(src.group, data.kernel.group, mat);
    out.matrix = std::move(mat);
    return out;
}

HomReport verify_levine(int n, int m) { return eta_map(n, m, false).report; }

TwistedKernelReport kernel_eta_twisted(int n, int m) {
    if (n % 4 != 2) throw validation_error("twisted kernels live in orders 2 mod 4");
    int k = (n + 2) / 4;
    TwistedKernelReport out;
    EtaMap eta = eta_map(n, m, true);
    out.kernel = eta.report.kernel;
    std::size_t w = hall_basis(m, k).size();
    out.expected = GroupStructure{0, std::vector<Int>(w, 2)};
    out.matches = out.kernel == out.expected;

    const TowerGroup& src = tower_group(n, m, TowerFlavor::twisted);
    BracketKernelData data = bracket_kernel(m, n, LieFlavor::lie);

    IntMatrix span(w, src.gens());
    out.generators_die = true;
    for (std::size_t i = 0; i < w; ++i) {
        const RootedPtr& h = hall_basis(m, k)[i];
        std::vector<Int> coords = src.twist_coords(node(h, h));
        span.set_row(i, coords);
        // image of the twist under the leaf sum
        std::size_t gen = 0;
        for (std::size_t g = src.trees.size(); g < src.gens(); ++g)
            if (coords[g] != 0) gen = g;
        std::vector<Int> tensor = eta_tensor(src, gen, data);
        auto sol = solve_in_rowspace(tensor, data.kernel.generators_in_domain);
        if (!sol || !data.kernel.group.is_zero(*sol)) out.generators_die = false;
    }

    std::vector<std::vector<Int>> rel;
    for (std::size_t i = 0; i < w; ++i) {
        std::vector<Int> row(w);
        row[i] = 2;
        rel.push_back(std::move(row));
    }
    PresentedGroup two_group(w, IntMatrix::from_rows(rel, w));
    HomReport inj = hom_analysis(two_group, src.group, span);
    out.generators_inject = inj.well_defined && inj.injective;
    return out;
}

FramedTwistedReport framed_vs_twisted(int even_order, int m) {
    if (even_order < 0 || even_order % 2 != 0)
        throw validation_error("the comparison starts at an even order");
    int k = even_order / 2;
    FramedTwistedReport out;

    const TowerGroup& plain = tower_group(even_order, m, TowerFlavor::plain);
    const TowerGroup& inf = tower_group(even_order, m, TowerFlavor::twisted);
    IntMatrix incl(plain.gens(), inf.gens());
    for (std::size_t i = 0; i < plain.gens(); ++i) incl.at(i, i) = 1;
    HomReport even = hom_analysis(plain.group, inf.group, incl);
    out.cokernel_even = even.cokernel;

    std::size_t w = std::size_t(witt_rank(m, k + 1));
    if ((k + 1) % 2 == 0) w += std::size_t(witt_rank(m, (k + 1) / 2));
    out.expected = GroupStructure{0, std::vector<Int>(w, 2)};

    bool ok = out.cokernel_even == out.expected;
    if (even_order >= 2) {
        out.has_odd = true;
        const TowerGroup& red = tower_group(even_order - 1, m, TowerFlavor::reduced);
        const TowerGroup& inf_odd = tower_group(even_order - 1, m, TowerFlavor::twisted);
        IntMatrix ident(red.gens(), inf_odd.gens());
        for (std::size_t i = 0; i < red.gens(); ++i) ident.at(i, i) = 1;
        HomReport odd = hom_analysis(red.group, inf_odd.group, ident);
        out.kernel_odd = odd.kernel;
        ok = ok && out.kernel_odd == out.expected;
    }
    out.matches = ok;
    return out;
}

Classification classify(int n, int m) {
    Classification out;
    out.n = n;
    out.m = m;
    out.t = tower_group(n, m, TowerFlavor::plain).group.structure();
    out.t_reduced = tower_group(n, m, TowerFlavor::reduced).group.structure();
    out.t_twisted = tower_group(n, m, TowerFlavor::twisted).group.structure();
    out.d = bracket_kernel(m, n, LieFlavor::lie).kernel.group.structure();
    out.d_quasi = bracket_kernel(m, n, LieFlavor::quasi).kernel.group.structure();

    EtaMap eta = eta_map(n, m, true);
    out.eta_kernel = eta.report.kernel;
    out.eta_cokernel = eta.report.cokernel;
    out.eta_iso = eta.report.isomorphism;

    out.w = out.t_reduced;
    out.w_inf = out.t_twisted;
    bool w_proved = n % 4 == 0 || n % 4 == 2 || n % 4 == 3 || n == 1;
    bool w_inf_proved = n % 4 != 2;
    out.status = (w_proved && w_inf_proved) ? "proved" : "conjectural";
    if (n % 4 == 2) out.note = "reported as the bracket kernel plus the leaf-sum kernel";
    return out;
}

}  // namespace wtcalc
