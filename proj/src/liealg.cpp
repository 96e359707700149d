#include "wtcalc/liealg.hpp"

#include <algorithm>
#include <utility>

namespace wtcalc {

namespace {

int mobius(int n) {
    int out = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        out = -out;
    }
    if (n > 1) out = -out;
    return out;
}

Int int_pow(Int base, int e) {
    Int out = 1;
    for (; e > 0; --e) out *= base;
    return out;
}

}  // namespace

Int witt_rank(int m, int degree) {
    if (m < 1) throw validation_error("generator count must be >= 1");
    if (degree < 1) throw validation_error("degree must be >= 1");
    Int total = 0;
    for (int e = 1; e <= degree; ++e) {
        if (degree % e) continue;
        int mu = mobius(e);
        if (mu) total += mu * int_pow(m, degree / e);
    }
    return div_exact(total, degree);
}

const std::vector<RootedPtr>& hall_basis(int m, int degree) {
    if (m < 1) throw validation_error("generator count must be >= 1");
    if (degree < 1) throw validation_error("degree must be >= 1");
    static std::map<std::pair<int, int>, std::vector<RootedPtr>> cache;
    auto key = std::make_pair(m, degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<RootedPtr> out;
    if (degree == 1) {
        for (int i = 1; i <= m; ++i) out.push_back(leaf(i));
    } else {
        for (int a = 1; a < degree; ++a)
            for (const RootedPtr& h : hall_basis(m, a))
                for (const RootedPtr& k : hall_basis(m, degree - a))
                    if (cmp(h, k) < 0 && (k->is_leaf() || cmp(k->left, h) <= 0))
                        out.push_back(node(h, k));
        std::sort(out.begin(), out.end(),
                  [](const RootedPtr& a, const RootedPtr& b) { return cmp(a, b) < 0; });
    }
    return cache.emplace(key, std::move(out)).first->second;
}

bool LieElement::operator==(const LieElement& o) const {
    auto eq = [](const std::map<RootedPtr, Int, TreeLess>& a,
                 const std::map<RootedPtr, Int, TreeLess>& b) {
        if (a.size() != b.size()) return false;
        auto i = a.begin();
        auto j = b.begin();
        for (; i != a.end(); ++i, ++j)
            if (cmp(i->first, j->first) != 0 || i->second != j->second) return false;
        return true;
    };
    return eq(free, o.free) && eq(sq, o.sq);
}

LieElement lie_unit(const RootedPtr& hall_tree) {
    LieElement e;
    e.free.emplace(hall_tree, 1);
    return e;
}

LieElement lie_add(const LieElement& a, const LieElement& b, const Int& scale) {
    LieElement out = a;
    for (const auto& [h, v] : b.free) {
        Int& c = out.free[h];
        c += scale * v;
        if (c == 0) out.free.erase(h);
    }
    for (const auto& [h, v] : b.sq) {
        Int& c = out.sq[h];
        c = (c + scale * v) % 2;
        if (c < 0) c += 2;
        if (c == 0) out.sq.erase(h);
    }
    return out;
}

namespace {

void add_term(LieElement& acc, const LieElement& e, const Int& scale) {
    acc = lie_add(acc, e, scale);
}

constexpr int kMaxDepth = 10000;

LieElement reduce_pair(const RootedPtr& h, const RootedPtr& k, LieFlavor flavor, int depth);

LieElement bracket_at(const LieElement& a, const LieElement& b, LieFlavor flavor, int depth) {
    // classes [h,h] bracket to zero on either side
    LieElement out;
    for (const auto& [ha, va] : a.free)
        for (const auto& [hb, vb] : b.free) add_term(out, reduce_pair(ha, hb, flavor, depth), va * vb);
    return out;
}

LieElement reduce_pair(const RootedPtr& h, const RootedPtr& k, LieFlavor flavor, int depth) {
    if (depth > kMaxDepth) throw internal_error("bracket rewriting exceeded the depth bound");
    LieElement out;
    int c = cmp(h, k);
    if (c == 0) {
        if (flavor == LieFlavor::quasi) out.sq.emplace(h, 1);
        return out;
    }
    if (c > 0) return lie_add(LieElement{}, reduce_pair(k, h, flavor, depth + 1), -1);
    if (k->is_leaf() || cmp(k->left, h) <= 0) {
        out.free.emplace(node(h, k), 1);
        return out;
    }
    // [h,[c,d]] with c > h: pass h inside, both factors stay ordered
    LieElement hc = reduce_pair(h, k->left, flavor, depth + 1);
    LieElement hd = reduce_pair(h, k->right, flavor, depth + 1);
    out = bracket_at(hc, lie_unit(k->right), flavor, depth + 1);
    add_term(out, bracket_at(lie_unit(k->left), hd, flavor, depth + 1), 1);
    return out;
}

}  // namespace

LieElement bracket(const LieElement& a, const LieElement& b, LieFlavor flavor) {
    return bracket_at(a, b, flavor, 0);
}

LieElement lie_reduce(const RootedPtr& t, LieFlavor flavor) {
    if (t->is_leaf()) {
        if (t->label < 1) throw validation_error("leaf label must be >= 1");
        return lie_unit(t);
    }
    return bracket(lie_reduce(t->left, flavor), lie_reduce(t->right, flavor), flavor);
}

std::map<Word, Int> assoc_expand(const RootedPtr& t) {
    std::map<Word, Int> out;
    if (t->is_leaf()) {
        out.emplace(Word{t->label}, 1);
        return out;
    }
    auto a = assoc_expand(t->left);
    auto b = assoc_expand(t->right);
    auto acc = [&out](const std::map<Word, Int>& u, const std::map<Word, Int>& v, int sign) {
        for (const auto& [wu, cu] : u)
            for (const auto& [wv, cv] : v) {
                Word w = wu;
                w.insert(w.end(), wv.begin(), wv.end());
                Int& c = out[w];
                c += sign * cu * cv;
                if (c == 0) out.erase(w);
            }
    };
    acc(a, b, 1);
    acc(b, a, -1);
    return out;
}

BracketKernelData bracket_kernel(int m, int n, LieFlavor flavor) {
    if (m < 1) throw validation_error("generator count must be >= 1");
    if (n < 0) throw validation_error("degree must be >= 0");

    std::vector<TensorGen> domain;
    for (int i = 1; i <= m; ++i)
        for (const RootedPtr& h : hall_basis(m, n + 1)) domain.push_back({i, h, false});
    std::size_t plain = domain.size();
    if (flavor == LieFlavor::quasi && (n + 1) % 2 == 0)
        for (int i = 1; i <= m; ++i)
            for (const RootedPtr& k : hall_basis(m, (n + 1) / 2)) domain.push_back({i, k, true});

    std::vector<RootedPtr> cfree = hall_basis(m, n + 2);
    std::vector<RootedPtr> csq;
    if (flavor == LieFlavor::quasi && (n + 2) % 2 == 0) csq = hall_basis(m, (n + 2) / 2);

    std::map<RootedPtr, std::size_t, TreeLess> fcol, scol;
    for (std::size_t i = 0; i < cfree.size(); ++i) fcol.emplace(cfree[i], i);
    for (std::size_t i = 0; i < csq.size(); ++i) scol.emplace(csq[i], cfree.size() + i);

    IntMatrix mat(domain.size(), cfree.size() + csq.size());
    for (std::size_t r = 0; r < domain.size(); ++r) {
        const TensorGen& g = domain[r];
        if (g.squared) continue;  // [X, [k,k]] collapses, the row stays zero
        LieElement img = bracket(lie_unit(leaf(g.x)), lie_unit(g.h), flavor);
        for (const auto& [h, v] : img.free) mat.at(r, fcol.at(h)) = v;
        for (const auto& [h, v] : img.sq) mat.at(r, scol.at(h)) = v;
    }

    std::vector<std::vector<Int>> drel, crel;
    for (std::size_t i = plain; i < domain.size(); ++i) {
        std::vector<Int> row(domain.size());
        row[i] = 2;
        drel.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < csq.size(); ++i) {
        std::vector<Int> row(cfree.size() + csq.size());
        row[cfree.size() + i] = 2;
        crel.push_back(std::move(row));
    }

    PresentedGroup dg(domain.size(), IntMatrix::from_rows(drel, domain.size()));
    PresentedGroup cg(cfree.size() + csq.size(),
                      IntMatrix::from_rows(crel, cfree.size() + csq.size()));
    KernelPresentation kp = kernel_presentation(dg, cg, mat);
    return {m,   n,  flavor, std::move(domain), std::move(cfree), std::move(csq),
            std::move(mat), std::move(dg), std::move(cg), std::move(kp)};
}

std::vector<RootedPtr> sl_map(const std::vector<TensorTerm>& cycle, int m) {
    if (m < 1) throw validation_error("generator count must be >= 1");
    if (cycle.empty()) return {};
    int d = cycle.front().t->order + 1;
    for (const TensorTerm& term : cycle) {
        if (term.t->order + 1 != d) throw validation_error("mixed tree degrees in one element");
        if (term.x < 1 || term.x > m || max_label(term.t) > m)
            throw validation_error("label exceeds the generator count");
    }
    if (d % 2 == 0)
        throw validation_error("torsion obstruction needs odd tree degree");

    LieElement lie_total, quasi_total;
    for (const TensorTerm& term : cycle) {
        LieElement xl = lie_unit(leaf(term.x));
        lie_total = lie_add(lie_total,
                            bracket(xl, lie_reduce(term.t, LieFlavor::lie), LieFlavor::lie),
                            term.coeff);
        quasi_total = lie_add(
            quasi_total, bracket(xl, lie_reduce(term.t, LieFlavor::quasi), LieFlavor::quasi),
            term.coeff);
    }
    if (!lie_total.zero()) throw validation_error("element is not a cycle: bracket is nonzero");
    if (!quasi_total.free.empty())
        throw internal_error("free residue survived a vanishing bracket");

    std::vector<RootedPtr> out;
    for (const auto& [h, v] : quasi_total.sq)
        if (v % 2 != 0) out.push_back(h);
    return out;
}

}  // namespace wtcalc
