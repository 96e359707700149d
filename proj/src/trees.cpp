#include "wtcalc/trees.hpp"

#include <algorithm>
#include <map>

namespace wtcalc {

RootedPtr leaf(int label) {
    if (label < 1) throw validation_error("leaf label must be >= 1");
    auto t = std::make_shared<RootedTree>();
    t->label = label;
    return t;
}

RootedPtr node(const RootedPtr& a, const RootedPtr& b) {
    auto t = std::make_shared<RootedTree>();
    t->left = a;
    t->right = b;
    t->order = a->order + b->order + 1;
    return t;
}

int cmp(const RootedPtr& a, const RootedPtr& b) {
    if (a->order != b->order) return a->order < b->order ? -1 : 1;
    if (a->is_leaf()) return a->label < b->label ? -1 : (a->label == b->label ? 0 : 1);
    if (int c = cmp(a->left, b->left)) return c;
    return cmp(a->right, b->right);
}

std::pair<RootedPtr, int> canonical_rooted(const RootedPtr& t) {
    if (t->is_leaf()) return {t, 1};
    auto [l, sl] = canonical_rooted(t->left);
    auto [r, sr] = canonical_rooted(t->right);
    if (cmp(l, r) <= 0) return {node(l, r), sl * sr};
    return {node(r, l), -sl * sr};
}

int max_label(const RootedPtr& t) {
    if (t->is_leaf()) return t->label;
    return std::max(max_label(t->left), max_label(t->right));
}

namespace {

// which half of a glued pair is written first: the deeper one, breaking
// equal depth by the structural order
int cmp_half(const RootedPtr& a, const RootedPtr& b) {
    if (a->order != b->order) return a->order > b->order ? -1 : 1;
    return cmp(a, b);
}

}  // namespace

int cmp(const UnrootedTree& a, const UnrootedTree& b) {
    // the better-balanced cut comes first, then lexicographic on the halves
    int da = a.first->order - a.second->order;
    int db = b.first->order - b.second->order;
    if (da != db) return da < db ? -1 : 1;
    if (int c = cmp(a.first, b.first)) return c;
    return cmp(a.second, b.second);
}

namespace {

void descend(const RootedPtr& s, const RootedPtr& c,
             std::vector<std::pair<RootedPtr, RootedPtr>>& out) {
    if (s->is_leaf()) return;
    // the two child edges of s's root vertex; complements keep the cyclic order
    RootedPtr cl = node(s->right, c);
    RootedPtr cr = node(c, s->left);
    out.emplace_back(s->left, cl);
    descend(s->left, cl, out);
    out.emplace_back(s->right, cr);
    descend(s->right, cr, out);
}

}  // namespace

std::vector<std::pair<RootedPtr, RootedPtr>> all_splits(const RootedPtr& i, const RootedPtr& j) {
    std::vector<std::pair<RootedPtr, RootedPtr>> out;
    out.emplace_back(i, j);
    descend(i, j, out);
    descend(j, i, out);
    return out;
}

std::vector<std::pair<int, RootedPtr>> leaf_splits(const UnrootedTree& t) {
    auto splits = all_splits(t.first, t.second);
    std::vector<std::pair<int, RootedPtr>> out;
    if (t.first->is_leaf()) out.emplace_back(t.first->label, t.second);
    if (t.second->is_leaf()) out.emplace_back(t.second->label, t.first);
    for (std::size_t k = 1; k < splits.size(); ++k)
        if (splits[k].first->is_leaf()) out.emplace_back(splits[k].first->label, splits[k].second);
    return out;
}

std::pair<UnrootedTree, int> canonicalize(const RootedPtr& i, const RootedPtr& j) {
    bool have = false;
    UnrootedTree best;
    int best_sign = 1;
    for (const auto& [s, c] : all_splits(i, j)) {
        auto [cs, ss] = canonical_rooted(s);
        auto [cc, sc] = canonical_rooted(c);
        UnrootedTree cand = cmp_half(cs, cc) <= 0 ? UnrootedTree{cs, cc} : UnrootedTree{cc, cs};
        // ties across edges happen only for trees with a symmetry; preferring
        // the + sign keeps the result independent of the input rooting
        int rel = have ? cmp(cand, best) : -1;
        if (rel < 0 || (rel == 0 && ss * sc > best_sign)) {
            have = true;
            best = cand;
            best_sign = ss * sc;
        }
    }
    return {best, best_sign};
}

std::pair<UnrootedTree, int> canonicalize(const UnrootedTree& t) {
    return canonicalize(t.first, t.second);
}

std::pair<UnrootedTree, int> inner_product(const RootedPtr& i, const RootedPtr& j) {
    return canonicalize(i, j);
}

std::string format(const RootedPtr& t) {
    if (t->is_leaf()) return std::to_string(t->label);
    return "(" + format(t->left) + "," + format(t->right) + ")";
}

std::string format(const UnrootedTree& t) {
    return "<" + format(t.first) + "," + format(t.second) + ">";
}

std::string format(const TwistedGen& t) { return "tw(" + format(t.j) + ")"; }

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int m;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw validation_error("tree parse error at position " + std::to_string(pos) + ": " + why);
    }

    void expect(char c) {
        skip();
        if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    RootedPtr rooted() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s[pos] == '(') {
            ++pos;
            RootedPtr a = rooted();
            expect(',');
            RootedPtr b = rooted();
            expect(')');
            return node(a, b);
        }
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected label or '('");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) fail("label out of range");
            ++pos;
        }
        if (v < 1) fail("label must be >= 1");
        if (m > 0 && v > m) fail("label exceeds declared label count " + std::to_string(m));
        return leaf(static_cast<int>(v));
    }
};

}  // namespace

ParsedTree parse_tree(const std::string& text, int m) {
    Parser p{text, 0, m};
    p.skip();
    ParsedTree out;
    if (text.compare(p.pos, 3, "tw(") == 0) {
        p.pos += 3;
        RootedPtr j = p.rooted();
        p.expect(')');
        out = TwistedGen{j};
    } else if (p.pos < text.size() && text[p.pos] == '<') {
        ++p.pos;
        RootedPtr a = p.rooted();
        p.expect(',');
        RootedPtr b = p.rooted();
        p.expect('>');
        out = UnrootedTree{a, b};
    } else {
        out = p.rooted();
    }
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

std::vector<RootedPtr> enumerate_rooted(int order, int m) {
    if (order < 0) return {};
    if (m < 1) throw validation_error("label count must be >= 1");
    std::vector<std::vector<RootedPtr>> by_order(order + 1);
    for (int i = 1; i <= m; ++i) by_order[0].push_back(leaf(i));
    for (int k = 1; k <= order; ++k)
        for (int a = 0; a < k; ++a)
            for (const RootedPtr& l : by_order[a])
                for (const RootedPtr& r : by_order[k - 1 - a]) by_order[k].push_back(node(l, r));
    return by_order[order];
}

std::vector<UnrootedTree> enumerate_trees(int order, int m) {
    if (order < 0) throw validation_error("tree order must be >= 0");
    std::map<std::string, UnrootedTree> seen;
    for (int a = 0; a <= order; ++a) {
        auto left = enumerate_rooted(a, m);
        auto right = enumerate_rooted(order - a, m);
        for (const RootedPtr& i : left)
            for (const RootedPtr& j : right) {
                UnrootedTree c = canonicalize(i, j).first;
                seen.emplace(format(c), c);
            }
    }
    std::vector<UnrootedTree> out;
    for (auto& [k, t] : seen) out.push_back(t);
    std::sort(out.begin(), out.end(), [](const UnrootedTree& a, const UnrootedTree& b) {
        return cmp(a, b) < 0;
    });
    return out;
}

IntMatrix tree_relators(int order, int m, RelatorKind kind) {
    auto gens = enumerate_trees(order, m);
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < gens.size(); ++k) index.emplace(format(gens[k]), k);

    auto col_of = [&](const UnrootedTree& t) {
        auto it = index.find(format(t));
        if (it == index.end()) throw internal_error("relator tree escaped the generator index");
        return it->second;
    };

    std::vector<std::vector<Int>> rows;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (const auto& [s, c] : all_splits(gens[g].first, gens[g].second)) {
            if (kind == RelatorKind::antisymmetry) {
                // one vertex transposition per internal split side
                for (int side = 0; side < 2; ++side) {
                    const RootedPtr& v = side == 0 ? s : c;
                    const RootedPtr& other = side == 0 ? c : s;
                    if (v->is_leaf()) continue;
                    auto [ct, sign] = canonicalize(node(v->right, v->left), other);
                    if (cmp(ct, gens[g]) != 0)
                        throw internal_error("vertex swap changed the underlying tree");
                    if (sign == 1) {
                        std::vector<Int> row(gens.size());
                        row[g] = 2;
                        rows.push_back(std::move(row));
                    }
                }
            } else {
                if (s->is_leaf() || c->is_leaf()) continue;
                // edge with branches (P,Q | R,W): relator t - <(P,R),(Q,W)> + <(P,W),(Q,R)>
                auto [h, sh] = canonicalize(node(s->left, c->left), node(s->right, c->right));
                auto [x, sx] = canonicalize(node(s->left, c->right), node(s->right, c->left));
                std::vector<Int> row(gens.size());
                row[g] += 1;
                row[col_of(h)] -= sh;
                row[col_of(x)] += sx;
                bool nonzero = false;
                for (const Int& e : row)
                    if (e != 0) nonzero = true;
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }
    return IntMatrix::from_rows(rows, gens.size());
}

}  // namespace wtcalc
