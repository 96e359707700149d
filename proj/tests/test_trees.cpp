#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wtcalc/abelian.hpp"
#include "wtcalc/trees.hpp"

using namespace wtcalc;

namespace {

RootedPtr rp(const std::string& text, int m = 0) {
    return std::get<RootedPtr>(parse_tree(text, m));
}

UnrootedTree ut(const std::string& text, int m = 0) {
    return std::get<UnrootedTree>(parse_tree(text, m));
}

// random ordered shape over labels[lo..hi)
RootedPtr random_shape(std::mt19937& rng, const std::vector<int>& labels, int lo, int hi) {
    if (hi - lo == 1) return leaf(labels[lo]);
    std::uniform_int_distribution<int> cut(lo + 1, hi - 1);
    int c = cut(rng);
    return node(random_shape(rng, labels, lo, c), random_shape(rng, labels, c, hi));
}

RootedPtr random_tree(std::mt19937& rng, int leaves, int max_label, bool distinct) {
    std::vector<int> labels(leaves);
    if (distinct) {
        for (int i = 0; i < leaves; ++i) labels[i] = i + 1;
        std::shuffle(labels.begin(), labels.end(), rng);
    } else {
        std::uniform_int_distribution<int> lab(1, max_label);
        for (int& l : labels) l = lab(rng);
    }
    return random_shape(rng, labels, 0, leaves);
}

// rebuild with the children of the k-th internal node (preorder) transposed
RootedPtr swap_internal(const RootedPtr& t, int& k) {
    if (t->is_leaf()) return t;
    if (k == 0) {
        --k;
        return node(t->right, t->left);
    }
    --k;
    RootedPtr l = swap_internal(t->left, k);
    if (k < 0) return node(l, t->right);
    return node(t->left, swap_internal(t->right, k));
}

// one random vertex transposition applied to the glued pair
void swap_random_vertex(std::mt19937& rng, RootedPtr& i, RootedPtr& j) {
    int total = i->order + j->order;
    REQUIRE(total > 0);
    std::uniform_int_distribution<int> pick(0, total - 1);
    int k = pick(rng);
    if (k < i->order) {
        i = swap_internal(i, k);
    } else {
        k -= i->order;
        j = swap_internal(j, k);
    }
}

GroupStructure graded_piece(int order, int m) {
    auto gens = enumerate_trees(order, m);
    IntMatrix rel = tree_relators(order, m, RelatorKind::antisymmetry)
                        .vstack(tree_relators(order, m, RelatorKind::jacobi));
    return PresentedGroup(gens.size(), rel).structure();
}

}  // namespace

TEST_CASE("rooted tree parse and format round trip") {
    CHECK(format(rp("(1,2)")) == "(1,2)");
    CHECK(format(rp("((1,2),3)")) == "((1,2),3)");
    CHECK(format(rp(" ( 1 , ( 2 , 3 ) ) ")) == "(1,(2,3))");
    CHECK(format(rp("7")) == "7");

    auto u = ut("<(1,2),3>");
    CHECK(format(u) == "<(1,2),3>");
    CHECK(u.order() == 1);

    auto tw = std::get<TwistedGen>(parse_tree("tw((1,2))"));
    CHECK(format(tw) == "tw((1,2))");

    CHECK(rp("(1,2)")->order == 1);
    CHECK(rp("(1,2)")->is_leaf() == false);
    CHECK(rp("5")->is_leaf());
    CHECK(max_label(rp("((4,1),2)")) == 4);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_tree("<1>"), Error);
    CHECK_THROWS_AS(parse_tree("(0,1)"), Error);
    CHECK_THROWS_AS(parse_tree("(1,2"), Error);
    CHECK_THROWS_AS(parse_tree("(1,2),3"), Error);
    CHECK_THROWS_AS(parse_tree(""), Error);
    CHECK_THROWS_AS(parse_tree("tw(1,2)"), Error);
    CHECK_THROWS_AS(parse_tree("<1,2,3>"), Error);
    CHECK_THROWS_AS(parse_tree("(1,x)"), Error);
    CHECK_THROWS_AS(parse_tree("(3,1)", 2), Error);
    CHECK_THROWS_AS(parse_tree("9999999999"), Error);

    try {
        parse_tree("(0,1)");
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.kind == Error::Kind::validation);
    }
}

TEST_CASE("rooted canonical form sorts children and tracks the sign") {
    auto [c1, s1] = canonical_rooted(rp("(2,1)"));
    CHECK(format(c1) == "(1,2)");
    CHECK(s1 == -1);

    auto [c2, s2] = canonical_rooted(rp("(1,2)"));
    CHECK(format(c2) == "(1,2)");
    CHECK(s2 == 1);

    // two swaps needed: ((3,1),2) -> ((1,3),2) -> (2,(1,3))? no: order sorts first
    auto [c3, s3] = canonical_rooted(rp("((3,1),2)"));
    CHECK(format(c3) == "(2,(1,3))");
    CHECK(s3 == 1);

    auto [c4, s4] = canonical_rooted(rp("(1,1)"));
    CHECK(format(c4) == "(1,1)");
    CHECK(s4 == 1);
}

TEST_CASE("glued pair canonical form matches pinned examples") {
    auto [t1, s1] = canonicalize(rp("(2,1)"), rp("3"));
    CHECK(format(t1) == "<(1,2),3>");
    CHECK(s1 == -1);

    auto [t2, s2] = canonicalize(rp("(1,2)"), rp("3"));
    CHECK(format(t2) == "<(1,2),3>");
    CHECK(s2 == 1);

    auto [t3, s3] = canonicalize(rp("(1,2)"), rp("(1,2)"));
    CHECK(format(t3) == "<(1,2),(1,2)>");
    CHECK(s3 == 1);

    auto [t4, s4] = canonicalize(rp("2"), rp("1"));
    CHECK(format(t4) == "<1,2>");
    CHECK(s4 == 1);

    auto [t5, s5] = canonicalize(rp("1"), rp("(2,3)"));
    CHECK(format(t5) == "<(1,2),3>");
    CHECK(s5 == 1);

    auto [t6, s6] = inner_product(rp("(1,1)"), rp("2"));
    CHECK(format(t6) == "<(1,1),2>");
    CHECK(s6 == 1);
}

TEST_CASE("canonical form is a fixed point and split independent") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 200; ++it) {
        int leaves = 2 + it % 5;
        RootedPtr a = random_tree(rng, leaves, 4, false);
        RootedPtr b = random_tree(rng, 1 + it % 3, 4, false);
        auto [rep, sign] = canonicalize(a, b);
        CHECK((sign == 1 || sign == -1));

        auto [rep2, sign2] = canonicalize(rep);
        CHECK(cmp(rep2, rep) == 0);
        CHECK(sign2 == 1);

        // every edge cut rebuilds the same oriented tree
        for (const auto& [s, c] : all_splits(a, b)) {
            auto [r, sg] = canonicalize(s, c);
            CHECK(cmp(r, rep) == 0);
            CHECK(sg == sign);
        }
    }
}

TEST_CASE("vertex transpositions flip the sign once each on distinct labels") {
    std::mt19937 rng(77);
    for (int it = 0; it < 200; ++it) {
        int leaves = 3 + it % 4;
        std::vector<int> labels(leaves + 1);
        for (int i = 0; i <= leaves; ++i) labels[i] = i + 1;
        std::shuffle(labels.begin(), labels.end(), rng);
        std::vector<int> la(labels.begin(), labels.begin() + leaves);
        RootedPtr a = random_shape(rng, la, 0, leaves);
        RootedPtr b = leaf(labels[leaves]);

        auto [rep0, s0] = canonicalize(a, b);
        int k = 1 + it % 4;
        for (int q = 0; q < k; ++q) swap_random_vertex(rng, a, b);
        auto [rep1, s1] = canonicalize(a, b);
        CHECK(cmp(rep1, rep0) == 0);
        CHECK(s1 == (k % 2 == 0 ? s0 : -s0));
    }
}

TEST_CASE("transpositions preserve the representative with repeated labels") {
    std::mt19937 rng(99);
    for (int it = 0; it < 150; ++it) {
        RootedPtr a = random_tree(rng, 3 + it % 3, 2, false);
        RootedPtr b = random_tree(rng, 1 + it % 2, 2, false);
        auto rep0 = canonicalize(a, b).first;
        swap_random_vertex(rng, a, b);
        auto rep1 = canonicalize(a, b).first;
        CHECK(cmp(rep1, rep0) == 0);
    }
}

TEST_CASE("edge cuts and leaf cuts have the expected counts") {
    auto t = ut("<(1,2),3>");
    CHECK(all_splits(t.first, t.second).size() == 3);
    CHECK(leaf_splits(t).size() == 3);

    auto h = ut("<(1,2),(3,4)>");
    CHECK(all_splits(h.first, h.second).size() == 5);
    CHECK(leaf_splits(h).size() == 4);

    auto e = ut("<1,1>");
    CHECK(all_splits(e.first, e.second).size() == 1);
    auto ls = leaf_splits(e);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].first == 1);
    CHECK(ls[1].first == 1);
    CHECK(format(ls[0].second) == "1");

    // complements at a leaf carry the full remaining tree
    auto y = ut("<(1,2),3>");
    std::multiset<std::string> comps;
    for (const auto& [lab, c] : leaf_splits(y)) comps.insert(std::to_string(lab) + "|" + format(c));
    CHECK(comps == std::multiset<std::string>{"1|(2,3)", "2|(3,1)", "3|(1,2)"});

    std::mt19937 rng(5);
    for (int it = 0; it < 100; ++it) {
        RootedPtr a = random_tree(rng, 2 + it % 4, 3, false);
        RootedPtr b = random_tree(rng, 1 + it % 3, 3, false);
        int n = a->order + b->order;
        CHECK(all_splits(a, b).size() == 2 * static_cast<std::size_t>(n) + 1);
        auto rep = canonicalize(a, b).first;
        auto cuts = leaf_splits(rep);
        CHECK(cuts.size() == static_cast<std::size_t>(n) + 2);
        for (const auto& [lab, c] : cuts) CHECK(c->order == n);
    }
}

TEST_CASE("pairing order adds and the result is canonical") {
    std::mt19937 rng(11);
    for (int it = 0; it < 100; ++it) {
        RootedPtr a = random_tree(rng, 1 + it % 4, 3, false);
        RootedPtr b = random_tree(rng, 1 + (it / 2) % 4, 3, false);
        auto [p, sign] = inner_product(a, b);
        CHECK(p.order() == a->order + b->order);
        CHECK((sign == 1 || sign == -1));
        auto [q, s2] = canonicalize(p);
        CHECK(cmp(q, p) == 0);
        CHECK(s2 == 1);
    }
}

TEST_CASE("enumeration gives each glued tree exactly once") {
    auto t02 = enumerate_trees(0, 2);
    REQUIRE(t02.size() == 3);
    CHECK(format(t02[0]) == "<1,1>");
    CHECK(format(t02[1]) == "<1,2>");
    CHECK(format(t02[2]) == "<2,2>");

    auto t11 = enumerate_trees(1, 1);
    REQUIRE(t11.size() == 1);
    CHECK(format(t11[0]) == "<(1,1),1>");

    auto t12 = enumerate_trees(1, 2);
    REQUIRE(t12.size() == 4);
    std::set<std::string> names;
    for (const auto& t : t12) names.insert(format(t));
    CHECK(names == std::set<std::string>{"<(1,1),1>", "<(1,1),2>", "<(1,2),2>", "<(2,2),2>"});

    CHECK(enumerate_trees(2, 1).size() == 1);
    CHECK(enumerate_trees(2, 2).size() == 6);
    CHECK(enumerate_trees(1, 3).size() == 10);

    // each listed tree is its own canonical form, and parse inverts format
    for (int order = 0; order <= 2; ++order)
        for (int m = 1; m <= 3; ++m)
            for (const auto& t : enumerate_trees(order, m)) {
                auto [c, s] = canonicalize(t);
                CHECK(cmp(c, t) == 0);
                CHECK(s == 1);
                auto back = ut(format(t), m);
                CHECK(cmp(canonicalize(back).first, t) == 0);
                CHECK(t.order() == order);
                CHECK(max_label(t.first) <= m);
                CHECK(max_label(t.second) <= m);
            }

    // rooted enumeration counts ordered shapes: m, m^2, 2 m^3
    CHECK(enumerate_rooted(0, 3).size() == 3);
    CHECK(enumerate_rooted(1, 3).size() == 9);
    CHECK(enumerate_rooted(2, 2).size() == 16);

    // every random tree appears in the list
    std::mt19937 rng(42);
    for (int it = 0; it < 60; ++it) {
        RootedPtr a = random_tree(rng, 2 + it % 3, 2, false);
        RootedPtr b = random_tree(rng, 1 + it % 2, 2, false);
        auto rep = canonicalize(a, b).first;
        auto all = enumerate_trees(rep.order(), 2);
        bool found = false;
        for (const auto& t : all) found = found || cmp(t, rep) == 0;
        CHECK(found);
    }
}

TEST_CASE("relator rows: doubling from symmetric transpositions") {
    // one generator <(1,1),1>, three vertex transpositions, all forcing 2t = 0
    IntMatrix as = tree_relators(1, 1, RelatorKind::antisymmetry);
    REQUIRE(as.cols() == 1);
    REQUIRE(as.rows() >= 1);
    for (std::size_t r = 0; r < as.rows(); ++r) CHECK(as.at(r, 0) == 2);

    // order zero: no internal vertices, no rows of either kind
    CHECK(tree_relators(0, 2, RelatorKind::antisymmetry).rows() == 0);
    CHECK(tree_relators(0, 2, RelatorKind::jacobi).rows() == 0);
    CHECK(tree_relators(1, 2, RelatorKind::jacobi).rows() == 0);

    // the distinct-label tree picks up no doubling row
    auto t13 = enumerate_trees(1, 3);
    IntMatrix as13 = tree_relators(1, 3, RelatorKind::antisymmetry);
    std::size_t col123 = t13.size();
    for (std::size_t i = 0; i < t13.size(); ++i)
        if (format(t13[i]) == "<(1,2),3>") col123 = i;
    REQUIRE(col123 < t13.size());
    for (std::size_t r = 0; r < as13.rows(); ++r) CHECK(as13.at(r, col123) == 0);
}

TEST_CASE("relator rows: edge exchange collapses the four leaf caterpillar") {
    IntMatrix ihx = tree_relators(2, 1, RelatorKind::jacobi);
    REQUIRE(ihx.cols() == 1);
    REQUIRE(ihx.rows() >= 1);
    bool unit = false;
    for (std::size_t r = 0; r < ihx.rows(); ++r)
        if (ihx.at(r, 0) == 1 || ihx.at(r, 0) == -1) unit = true;
    CHECK(unit);
}

TEST_CASE("relator columns stay inside the generator index range") {
    for (int order = 0; order <= 3; ++order)
        for (int m = 1; m <= 2; ++m) {
            auto gens = enumerate_trees(order, m);
            for (auto kind : {RelatorKind::antisymmetry, RelatorKind::jacobi}) {
                IntMatrix rel = tree_relators(order, m, kind);
                CHECK(rel.cols() == gens.size());
                for (std::size_t r = 0; r < rel.rows(); ++r) {
                    bool nonzero = false;
                    for (std::size_t c = 0; c < rel.cols(); ++c)
                        if (rel.at(r, c) != 0) nonzero = true;
                    CHECK(nonzero);
                }
            }
        }
}

TEST_CASE("graded pieces of the tree group match hand computations") {
    CHECK(graded_piece(0, 2).to_string() == "Z^3");
    CHECK(graded_piece(1, 1).to_string() == "Z/2");
    CHECK(graded_piece(1, 2).to_string() == "Z/2 + Z/2 + Z/2 + Z/2");
    CHECK(graded_piece(2, 1).to_string() == "0");
    CHECK(graded_piece(2, 2).to_string() == "Z");

    GroupStructure g13 = graded_piece(1, 3);
    CHECK(g13.rank == 1);
    REQUIRE(g13.torsion.size() == 9);
    for (const Int& t : g13.torsion) CHECK(t == 2);
}
