#include "wtcalc/braids.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

namespace wtcalc {

namespace {

void check_strands(const Braid& b) {
    if (b.strands < 1) throw validation_error("a braid needs at least one strand");
    for (int letter : b.letters) {
        int k = std::abs(letter);
        if (k < 1 || k >= b.strands) throw validation_error("crossing index out of range");
    }
}

}  // namespace

Braid braid_mul(const Braid& a, const Braid& b) {
    if (a.strands != b.strands) throw validation_error("strand counts differ");
    Braid out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

Braid braid_inverse(const Braid& b) {
    Braid out;
    out.strands = b.strands;
    out.letters.reserve(b.letters.size());
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

Braid braid_commutator(const Braid& a, const Braid& b) {
    return braid_mul(braid_mul(a, b), braid_mul(braid_inverse(a), braid_inverse(b)));
}

Braid band_generator(int i, int j, int strands) {
    if (i < 1 || i >= j || j > strands)
        throw validation_error("band generator needs 1 <= i < j <= strands");
    Braid out;
    out.strands = strands;
    for (int k = j - 1; k > i; --k) out.letters.push_back(k);
    out.letters.push_back(i);
    out.letters.push_back(i);
    for (int k = i + 1; k <= j - 1; ++k) out.letters.push_back(-k);
    return out;
}

namespace {

struct BraidParser {
    const std::string& text;
    size_t pos = 0;
    int strands;

    [[noreturn]] void fail(const std::string& why) const {
        throw validation_error("braid parse error at position " + std::to_string(pos) + ": " +
                               why);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) fail("number too large");
            ++pos;
        }
        return neg ? -v : v;
    }

    Braid parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("expected a braid");
        char c = text[pos];
        if (c == 's' || c == 'S') {
            ++pos;
            long k = parse_int();
            if (k < 1 || k >= strands) fail("crossing index out of range");
            return Braid{strands, {static_cast<int>(k)}};
        }
        if (c == 'A' || c == 'a') {
            ++pos;
            expect('(');
            long i = parse_int();
            expect(',');
            long j = parse_int();
            expect(')');
            if (i < 1 || i >= j || j > strands) fail("band generator needs 1 <= i < j <= strands");
            return band_generator(static_cast<int>(i), static_cast<int>(j), strands);
        }
        if (c == '[') {
            ++pos;
            Braid a = parse_seq();
            expect(',');
            Braid b = parse_seq();
            expect(']');
            return braid_commutator(a, b);
        }
        if (c == '(') {
            ++pos;
            Braid a = parse_seq();
            expect(')');
            return a;
        }
        fail("expected 's', 'A', '[' or '('");
    }

    Braid parse_term() {
        Braid a = parse_atom();
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            long e = parse_int();
            Braid base = e < 0 ? braid_inverse(a) : a;
            Braid out{strands, {}};
            for (long k = 0; k < std::labs(e); ++k) out = braid_mul(out, base);
            return out;
        }
        return a;
    }

    bool at_term_start() {
        skip_ws();
        if (pos >= text.size()) return false;
        char c = text[pos];
        return c == 's' || c == 'S' || c == 'A' || c == 'a' || c == '[' || c == '(';
    }

    Braid parse_seq() {
        Braid out{strands, {}};
        if (!at_term_start()) fail("expected a braid");
        while (at_term_start()) out = braid_mul(out, parse_term());
        return out;
    }
};

}  // namespace

Braid parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw validation_error("a braid needs at least one strand");
    BraidParser p{text, 0, strands};
    p.skip_ws();
    // "1" denotes the trivial braid
    if (p.pos < text.size() && text[p.pos] == '1') {
        ++p.pos;
        p.skip_ws();
        if (p.pos != text.size()) p.fail("trailing input after '1'");
        return Braid{strands, {}};
    }
    if (p.pos == text.size()) return Braid{strands, {}};
    Braid b = p.parse_seq();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return b;
}

std::string format_braid(const Braid& b) {
    if (b.letters.empty()) return "1";
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < b.letters.size()) {
        size_t j = i;
        while (j < b.letters.size() && b.letters[j] == b.letters[i]) ++j;
        long run = static_cast<long>(j - i);
        long e = b.letters[i] > 0 ? run : -run;
        if (!first) out << ' ';
        first = false;
        out << 's' << std::abs(b.letters[i]);
        if (e != 1) out << '^' << e;
        i = j;
    }
    return out.str();
}

std::vector<int> braid_permutation(const Braid& b) {
    check_strands(b);
    std::vector<int> pos(b.strands);
    for (int p = 0; p < b.strands; ++p) pos[p] = p + 1;
    for (int letter : b.letters) {
        int k = std::abs(letter);
        std::swap(pos[k - 1], pos[k]);
    }
    return pos;
}

bool is_pure(const Braid& b) {
    std::vector<int> pos = braid_permutation(b);
    for (int p = 0; p < b.strands; ++p)
        if (pos[p] != p + 1) return false;
    return true;
}

StringLinkData braid_longitudes(const Braid& b) {
    check_strands(b);
    if (!is_pure(b))
        throw validation_error("longitudes need a pure braid; this one permutes its strands");
    ArtinAction act = artin_rep(b);
    int m = b.strands;
    std::vector<FreeWord> lon(m);
    for (int i = 1; i <= m; ++i) {
        // a pure braid sends x_i to a conjugate of itself; the conjugating
        // word, cyclically reduced, is the longitude up to framing
        const std::vector<int>& w = act.images[i - 1].letters;
        size_t a = 0, z = w.size();
        std::vector<int> conj;
        while (z - a >= 2 && w[a] == -w[z - 1]) {
            conj.push_back(w[a]);
            ++a;
            --z;
        }
        if (z - a != 1 || w[a] != i)
            throw internal_error("a meridian image is not a conjugate of its generator");
        long e = exponent_sum(FreeWord{conj}, i).convert_to<long>();
        for (long k = 0; k < std::labs(e); ++k) conj.push_back(e > 0 ? -i : i);
        lon[i - 1] = word_reduce(std::move(conj));
    }
    return StringLinkData{m, std::move(lon)};
}

ArtinAction artin_rep(const Braid& b) {
    check_strands(b);
    int m = b.strands;
    ArtinAction act;
    act.strands = m;
    act.images.resize(m);
    std::vector<FreeWord> phi(m);
    for (int i = 0; i < m; ++i) act.images[i] = FreeWord{{i + 1}};
    for (int letter : b.letters) {
        int k = std::abs(letter);
        for (int i = 0; i < m; ++i) phi[i] = FreeWord{{i + 1}};
        if (letter > 0) {
            phi[k - 1] = FreeWord{{k, k + 1, -k}};
            phi[k] = FreeWord{{k}};
        } else {
            phi[k - 1] = FreeWord{{k + 1}};
            phi[k] = FreeWord{{-(k + 1), k, k + 1}};
        }
        for (FreeWord& w : act.images) w = word_substitute(w, phi);
    }
    return act;
}

ArtinAction artin_compose(const ArtinAction& first, const ArtinAction& then) {
    if (first.strands != then.strands) throw validation_error("strand counts differ");
    ArtinAction out;
    out.strands = first.strands;
    out.images.reserve(first.images.size());
    for (const FreeWord& w : first.images) out.images.push_back(word_substitute(w, then.images));
    return out;
}

FreeWord artin_apply(const ArtinAction& a, const FreeWord& w) {
    if (max_generator(w) > a.strands)
        throw validation_error("the word mentions a strand beyond the strand count");
    return word_substitute(w, a.images);
}

Braid realize_tree(const UnrootedTree& t, int strands) {
    auto cuts = leaf_splits(t);
    std::vector<int> labels;
    labels.reserve(cuts.size());
    for (const auto& [l, c] : cuts) labels.push_back(l);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw validation_error("realization needs pairwise distinct leaf labels");
    int jmax = labels.back();
    if (strands == 0) strands = jmax;
    if (strands < jmax) throw validation_error("strand count below the largest leaf label");

    const RootedPtr* comp = nullptr;
    for (const auto& [l, c] : cuts)
        if (l == jmax) comp = &c;
    std::function<Braid(const RootedPtr&)> build = [&](const RootedPtr& s) -> Braid {
        if (s->is_leaf()) return band_generator(s->label, jmax, strands);
        return braid_commutator(build(s->left), build(s->right));
    };
    Braid b = build(*comp);

    // recompute the obstruction and compare with the leaf-sum expansion
    std::map<std::pair<int, std::string>, Int> mu, eta;
    try {
        TotalMilnor tm = total_milnor(braid_longitudes(b), t.order());
        for (const TensorTerm& term : tm.value) mu[{term.x, format(term.t)}] += term.coeff;
    } catch (const Error& e) {
        throw internal_error(std::string("realization self-check failed: ") + e.what());
    }
    for (const auto& [l, c] : cuts) {
        LieElement e = lie_reduce(c, LieFlavor::lie);
        for (const auto& [h, co] : e.free) eta[{l, format(h)}] += co;
    }
    for (auto it = mu.begin(); it != mu.end();) it = it->second == 0 ? mu.erase(it) : std::next(it);
    for (auto it = eta.begin(); it != eta.end();) it = it->second == 0 ? eta.erase(it) : std::next(it);
    bool plus = mu == eta;
    bool minus = mu.size() == eta.size() &&
                 std::equal(mu.begin(), mu.end(), eta.begin(), [](const auto& a, const auto& b) {
                     return a.first == b.first && a.second == -b.second;
                 });
    if (!plus && !minus)
        throw internal_error("the realized braid disagrees with the tree obstruction");
    return b;
}

}  // namespace wtcalc
