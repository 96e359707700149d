#include "wtcalc/freeword.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace wtcalc {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter) {
        out.pop_back();
    } else {
        out.push_back(letter);
    }
}

}  // namespace

FreeWord word_reduce(std::vector<int> letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int letter : letters) push_reduced(out, letter);
    return FreeWord{std::move(out)};
}

FreeWord word_mul(const FreeWord& a, const FreeWord& b) {
    std::vector<int> out = a.letters;
    out.reserve(a.letters.size() + b.letters.size());
    for (int letter : b.letters) push_reduced(out, letter);
    return FreeWord{std::move(out)};
}

FreeWord word_inverse(const FreeWord& w) {
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.push_back(-*it);
    return FreeWord{std::move(out)};
}

FreeWord word_commutator(const FreeWord& a, const FreeWord& b) {
    return word_mul(word_mul(a, b), word_mul(word_inverse(a), word_inverse(b)));
}

FreeWord word_conjugate(const FreeWord& a, const FreeWord& b) {
    return word_mul(word_mul(a, b), word_inverse(a));
}

Int exponent_sum(const FreeWord& w, int gen) {
    Int total = 0;
    for (int letter : w.letters) {
        if (letter == gen) total += 1;
        if (letter == -gen) total -= 1;
    }
    return total;
}

int max_generator(const FreeWord& w) {
    int m = 0;
    for (int letter : w.letters) m = std::max(m, std::abs(letter));
    return m;
}

FreeWord word_substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
    FreeWord out;
    for (int letter : w.letters) {
        int gen = std::abs(letter);
        if (gen < 1 || gen > static_cast<int>(images.size()))
            throw internal_error("substitution image missing for a generator");
        const FreeWord& img = images[gen - 1];
        out = word_mul(out, letter > 0 ? img : word_inverse(img));
    }
    return out;
}

namespace {

struct WordParser {
    const std::string& text;
    size_t pos = 0;
    int m;

    [[noreturn]] void fail(const std::string& why) const {
        throw validation_error("word parse error at position " + std::to_string(pos) + ": " + why);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
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

    FreeWord parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("expected a word");
        char c = text[pos];
        if (c == 'x' || c == 'X') {
            ++pos;
            long label = parse_int();
            if (label < 1) fail("generator index must be at least 1");
            if (m > 0 && label > m) fail("generator index exceeds the strand count");
            return FreeWord{{static_cast<int>(label)}};
        }
        if (c == '[') {
            ++pos;
            FreeWord a = parse_seq();
            expect(',');
            FreeWord b = parse_seq();
            expect(']');
            return word_commutator(a, b);
        }
        if (c == '(') {
            ++pos;
            FreeWord a = parse_seq();
            expect(')');
            return a;
        }
        fail("expected 'x', '[' or '('");
    }

    FreeWord parse_term() {
        FreeWord a = parse_atom();
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            long e = parse_int();
            FreeWord base = e < 0 ? word_inverse(a) : a;
            FreeWord out;
            for (long k = 0; k < std::labs(e); ++k) out = word_mul(out, base);
            return out;
        }
        return a;
    }

    bool at_term_start() {
        skip_ws();
        if (pos >= text.size()) return false;
        char c = text[pos];
        return c == 'x' || c == 'X' || c == '[' || c == '(';
    }

    FreeWord parse_seq() {
        FreeWord out;
        if (!at_term_start()) fail("expected a word");
        while (at_term_start()) out = word_mul(out, parse_term());
        return out;
    }
};

}  // namespace

FreeWord parse_word(const std::string& text, int m) {
    WordParser p{text, 0, m};
    p.skip_ws();
    // "1" denotes the empty word
    if (p.pos < text.size() && text[p.pos] == '1') {
        ++p.pos;
        p.skip_ws();
        if (p.pos != text.size()) p.fail("trailing input after '1'");
        return FreeWord{};
    }
    if (p.pos == text.size()) return FreeWord{};
    FreeWord w = p.parse_seq();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return w;
}

std::string format_word(const FreeWord& w) {
    if (w.letters.empty()) return "1";
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < w.letters.size()) {
        size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        long run = static_cast<long>(j - i);
        long e = w.letters[i] > 0 ? run : -run;
        if (!first) out << ' ';
        first = false;
        out << 'x' << std::abs(w.letters[i]);
        if (e != 1) out << '^' << e;
        i = j;
    }
    return out.str();
}

}  // namespace wtcalc
