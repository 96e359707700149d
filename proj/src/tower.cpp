#include "wtcalc/tower.hpp"

#include <memory>
#include <tuple>
#include <utility>

namespace wtcalc {

namespace {

// all one-site edge rewrites inside a rooted tree: for each edge between an
// internal vertex and its internal child, the two full replacement trees
std::vector<std::pair<RootedPtr, RootedPtr>> edge_rewrites(const RootedPtr& j) {
    std::vector<std::pair<RootedPtr, RootedPtr>> out;
    if (j->is_leaf()) return out;
    if (!j->right->is_leaf()) {
        const RootedPtr& s = j->left;
        const RootedPtr& c = j->right->left;
        const RootedPtr& d = j->right->right;
        out.emplace_back(node(node(s, c), d), node(c, node(s, d)));
    }
    if (!j->left->is_leaf()) {
        const RootedPtr& c = j->left->left;
        const RootedPtr& d = j->left->right;
        const RootedPtr& s = j->right;
        out.emplace_back(node(node(c, s), d), node(c, node(d, s)));
    }
    for (const auto& [h, x] : edge_rewrites(j->left))
        out.emplace_back(node(h, j->right), node(x, j->right));
    for (const auto& [h, x] : edge_rewrites(j->right))
        out.emplace_back(node(j->left, h), node(j->left, x));
    return out;
}

void add_into(std::vector<Int>& row, const std::vector<Int>& v, const Int& scale) {
    for (std::size_t i = 0; i < row.size(); ++i) row[i] += scale * v[i];
}

bool nonzero(const std::vector<Int>& row) {
    for (const Int& e : row)
        if (e != 0) return true;
    return false;
}

std::unique_ptr<TowerGroup> build(int order, int m, TowerFlavor flavor) {
    auto tg = std::make_unique<TowerGroup>();
    tg->order = order;
    tg->m = m;
    tg->flavor = flavor;
    tg->trees = enumerate_trees(order, m);
    for (std::size_t i = 0; i < tg->trees.size(); ++i) tg->tree_col.emplace(format(tg->trees[i]), i);

    bool even = order % 2 == 0;
    if (flavor == TowerFlavor::twisted && even) {
        std::map<std::string, RootedPtr> seen;
        for (const RootedPtr& j : enumerate_rooted(order / 2, m)) {
            RootedPtr c = canonical_rooted(j).first;
            seen.emplace(format(c), c);
        }
        for (auto& [k, j] : seen) tg->twists.push_back(j);
        for (std::size_t i = 0; i < tg->twists.size(); ++i)
            tg->twist_col.emplace(format(tg->twists[i]), tg->trees.size() + i);
    }

    std::size_t cols = tg->gens();
    std::vector<std::vector<Int>> rows;
    auto push_tree_rows = [&](const IntMatrix& rel) {
        for (std::size_t r = 0; r < rel.rows(); ++r) {
            std::vector<Int> row(cols);
            for (std::size_t c = 0; c < rel.cols(); ++c) row[c] = rel.at(r, c);
            rows.push_back(std::move(row));
        }
    };
    push_tree_rows(tree_relators(order, m, RelatorKind::antisymmetry));
    push_tree_rows(tree_relators(order, m, RelatorKind::jacobi));

    auto tree_coords_sized = [&](const RootedPtr& a, const RootedPtr& b) {
        auto [rep, sign] = canonicalize(a, b);
        std::vector<Int> row(cols);
        row[tg->tree_col.at(format(rep))] = sign;
        return row;
    };

    if (flavor != TowerFlavor::plain && !even) {
        // framing corrections of every tree of half order
        for (const UnrootedTree& t : enumerate_trees((order - 1) / 2, m)) {
            std::vector<Int> row(cols);
            for (const auto& [l, c] : leaf_splits(t))
                add_into(row, tree_coords_sized(leaf(l), node(c, c)), 1);
            if (nonzero(row)) rows.push_back(std::move(row));
        }
    }

    if (flavor == TowerFlavor::twisted && !even) {
        // boundary twists <(i,J),J> vanish
        std::map<std::string, RootedPtr> seen;
        for (const RootedPtr& j : enumerate_rooted((order - 1) / 2, m))
            seen.emplace(format(canonical_rooted(j).first), canonical_rooted(j).first);
        for (const auto& [k, j] : seen)
            for (int i = 1; i <= m; ++i) rows.push_back(tree_coords_sized(node(leaf(i), j), j));
    }

    if (flavor == TowerFlavor::twisted && even) {
        for (const RootedPtr& j : tg->twists) {
            std::size_t jc = tg->twist_col.at(format(j));
            // twice a twist generator is the interior pairing of its tree
            std::vector<Int> row(cols);
            row[jc] = 2;
            add_into(row, tree_coords_sized(j, j), -1);
            rows.push_back(std::move(row));
            // edge rewrites inside the twist, with the cross pairing correction
            for (const auto& [h, x] : edge_rewrites(j)) {
                std::vector<Int> site(cols);
                site[jc] += 1;
                site[tg->twist_col.at(format(canonical_rooted(h).first))] -= 1;
                site[tg->twist_col.at(format(canonical_rooted(x).first))] -= 1;
                add_into(site, tree_coords_sized(h, x), -1);
                if (nonzero(site)) rows.push_back(std::move(site));
            }
        }
    }

    tg->relators = IntMatrix::from_rows(rows, cols);
    tg->group = PresentedGroup(cols, tg->relators);
    return tg;
}

}  // namespace

std::vector<Int> TowerGroup::tree_coords(const RootedPtr& a, const RootedPtr& b) const {
    auto [rep, sign] = canonicalize(a, b);
    if (rep.order() != order) throw internal_error("tree order does not match the tower");
    auto it = tree_col.find(format(rep));
    if (it == tree_col.end()) throw internal_error("tree outside the tower label range");
    std::vector<Int> row(gens());
    row[it->second] = sign;
    return row;
}

std::vector<Int> TowerGroup::tree_coords(const UnrootedTree& t) const {
    return tree_coords(t.first, t.second);
}

std::vector<Int> TowerGroup::twist_coords(const RootedPtr& j) const {
    RootedPtr c = canonical_rooted(j).first;
    auto it = twist_col.find(format(c));
    if (it == twist_col.end()) throw internal_error("no twist generator for this tree");
    std::vector<Int> row(gens());
    row[it->second] = 1;
    return row;
}

const TowerGroup& tower_group(int order, int m, TowerFlavor flavor) {
    if (order < 0) throw validation_error("order must be >= 0");
    if (m < 1) throw validation_error("label count must be >= 1");
    static std::map<std::tuple<int, int, TowerFlavor>, std::unique_ptr<TowerGroup>> cache;
    auto key = std::make_tuple(order, m, flavor);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build(order, m, flavor)).first;
    return *it->second;
}

std::vector<Int> delta_coords(const UnrootedTree& t, const TowerGroup& target) {
    if (target.order != 2 * t.order() + 1)
        throw validation_error("framing correction lands in order 2k+1");
    if (max_label(t.first) > target.m || max_label(t.second) > target.m)
        throw validation_error("label exceeds the tower label count");
    std::vector<Int> row(target.gens());
    for (const auto& [l, c] : leaf_splits(t)) {
        std::vector<Int> term = target.tree_coords(leaf(l), node(c, c));
        for (std::size_t i = 0; i < row.size(); ++i) row[i] += term[i];
    }
    return row;
}

}  // namespace wtcalc
