#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "wtcalc/milnor.hpp"

using namespace wtcalc;

namespace {

FreeWord fw(const std::string& text, int m = 0) { return parse_word(text, m); }

FreeWord random_free_word(std::mt19937& rng, int m, int len) {
    std::uniform_int_distribution<int> lab(1, m);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) {
        int g = lab(rng);
        letters.push_back(sgn(rng) ? g : -g);
    }
    return word_reduce(std::move(letters));
}

int series_min_degree(const Series& s) {
    int best = -1;
    for (const auto& [w, c] : s) {
        if (w.empty()) continue;
        if (best < 0 || static_cast<int>(w.size()) < best) best = static_cast<int>(w.size());
    }
    return best;
}

std::map<std::pair<int, std::string>, Int> tensor_map(const std::vector<TensorTerm>& v) {
    std::map<std::pair<int, std::string>, Int> out;
    for (const TensorTerm& t : v) out[{t.x, format(t.t)}] += t.coeff;
    return out;
}

}  // namespace

TEST_CASE("free words reduce, multiply and invert") {
    CHECK(word_reduce({1, -1}).empty());
    CHECK(word_reduce({1, 2, -2, -1}).empty());
    CHECK(word_reduce({1, 2, -2, 1}) == FreeWord{{1, 1}});
    CHECK(word_mul(fw("x1 x2"), fw("x2^-1 x3")) == fw("x1 x3"));
    CHECK(word_inverse(fw("x1 x2^-1")) == fw("x2 x1^-1"));
    CHECK(word_commutator(fw("x1"), fw("x2")) == FreeWord{{1, 2, -1, -2}});
    CHECK(word_conjugate(fw("x1"), fw("x2")) == FreeWord{{1, 2, -1}});
    CHECK(word_mul(fw("x1"), word_inverse(fw("x1"))).empty());

    CHECK(exponent_sum(fw("x1 x2 x1 x2^-1 x1^-1"), 1) == 1);
    CHECK(exponent_sum(fw("x1 x2 x1 x2^-1 x1^-1"), 2) == 0);
    CHECK(max_generator(fw("x1 x5 x2")) == 5);
    CHECK(max_generator(FreeWord{}) == 0);

    std::mt19937 rng(411);
    for (int trial = 0; trial < 200; ++trial) {
        FreeWord a = random_free_word(rng, 3, 8);
        FreeWord b = random_free_word(rng, 3, 8);
        CHECK(word_mul(a, word_inverse(a)).empty());
        CHECK(word_inverse(word_mul(a, b)) == word_mul(word_inverse(b), word_inverse(a)));
        CHECK(parse_word(format_word(a)) == a);
    }
}

TEST_CASE("word parsing accepts the grammar and rejects junk") {
    CHECK(fw("x1 x2^-1") == FreeWord{{1, -2}});
    CHECK(fw("x1^3") == FreeWord{{1, 1, 1}});
    CHECK(fw("x2^-2") == FreeWord{{-2, -2}});
    CHECK(fw("[x1,x2]") == FreeWord{{1, 2, -1, -2}});
    CHECK(fw("[x1,[x1,x2]]") == word_commutator(fw("x1"), word_commutator(fw("x1"), fw("x2"))));
    CHECK(fw("[x1,x2]^-1") == FreeWord{{2, 1, -2, -1}});
    CHECK(fw("(x1 x2)^2") == FreeWord{{1, 2, 1, 2}});
    CHECK(fw("1").empty());
    CHECK(fw("").empty());
    CHECK(fw("x1^0").empty());

    for (const char* bad : {"x0", "y1", "x1^", "[x1]", "[x1,x2", "x1)", "1 x1", "x99999999"}) {
        CHECK_THROWS_AS(parse_word(bad), Error);
    }
    CHECK_THROWS_AS(parse_word("x3", 2), Error);
    CHECK_NOTHROW(parse_word("x3", 3));
    try {
        parse_word("x0");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == Error::Kind::validation);
    }
}

TEST_CASE("expansions of generators and inverses") {
    Series s = magnus(fw("x1"), 3);
    CHECK(s.size() == 2);
    CHECK(s.at(Word{}) == 1);
    CHECK(s.at(Word{1}) == 1);

    Series inv = magnus(fw("x1^-1"), 3);
    CHECK(inv.size() == 4);
    CHECK(inv.at(Word{}) == 1);
    CHECK(inv.at(Word{1}) == -1);
    CHECK(inv.at(Word{1, 1}) == 1);
    CHECK(inv.at(Word{1, 1, 1}) == -1);

    Series one = magnus(FreeWord{}, 4);
    CHECK(one.size() == 1);
    CHECK(one.at(Word{}) == 1);

    // commutator expansion starts with the bracket
    Series c = magnus(fw("[x1,x2]"), 2);
    CHECK(c.at(Word{}) == 1);
    CHECK(c.count(Word{1}) == 0);
    CHECK(c.count(Word{2}) == 0);
    CHECK(c.at(Word{1, 2}) == 1);
    CHECK(c.at(Word{2, 1}) == -1);
}

TEST_CASE("expansion is multiplicative and kills inverses") {
    std::mt19937 rng(1213);
    for (int trial = 0; trial < 500; ++trial) {
        FreeWord a = random_free_word(rng, 3, 7);
        FreeWord b = random_free_word(rng, 3, 7);
        Series lhs = magnus(word_mul(a, b), 4);
        Series rhs = series_mul(magnus(a, 4), magnus(b, 4), 4);
        CHECK(lhs == rhs);
    }
    for (int trial = 0; trial < 50; ++trial) {
        FreeWord a = random_free_word(rng, 3, 7);
        Series s = magnus(word_mul(a, word_inverse(a)), 4);
        CHECK(s.size() == 1);
        CHECK(s.at(Word{}) == 1);
    }
}

TEST_CASE("iterated commutators expand no lower than their weight") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        FreeWord a = random_free_word(rng, 3, 4);
        FreeWord b = random_free_word(rng, 3, 4);
        FreeWord c = word_commutator(a, b);
        FreeWord d = word_commutator(c, random_free_word(rng, 3, 4));
        int mc = series_min_degree(magnus(c, 4));
        int md = series_min_degree(magnus(d, 4));
        CHECK((mc < 0 || mc >= 2));
        CHECK((md < 0 || md >= 3));
    }
}

TEST_CASE("single coefficients of longitude expansions") {
    // both strands see the other once
    StringLinkData hopf{2, {fw("x1 x2 x1^-1"), fw("x1")}};
    CHECK(milnor_mu(hopf, {1, 2}) == 1);
    CHECK(milnor_mu(hopf, {2, 1}) == 1);
    CHECK(milnor_mu(hopf, {1, 1}) == 0);
    CHECK(milnor_mu(hopf, {2, 2}) == 0);
    // raw coefficients below the leading order carry conjugation noise
    CHECK(milnor_mu(hopf, {1, 2, 1}) == 1);
    CHECK(milnor_mu(hopf, {2, 1, 1}) == -1);

    CHECK_THROWS_AS(milnor_mu(hopf, {1}), Error);
    CHECK_THROWS_AS(milnor_mu(hopf, {1, 3}), Error);
    CHECK_THROWS_AS(milnor_mu(hopf, {0, 1}), Error);
    CHECK_THROWS_AS(milnor_mu(StringLinkData{2, {fw("x1")}}, {1, 2}), Error);
    CHECK_THROWS_AS(milnor_mu(StringLinkData{2, {fw("x3"), fw("x1")}}, {1, 2}), Error);
}

TEST_CASE("leading obstruction of explicit longitude data") {
    StringLinkData hopf{2, {fw("x1 x2 x1^-1"), fw("x1")}};
    TotalMilnor t0 = total_milnor(hopf, 0);
    CHECK(!t0.zero());
    auto mu = tensor_map(t0.value);
    CHECK(mu.size() == 2);
    CHECK(mu.at({1, "2"}) == 1);
    CHECK(mu.at({2, "1"}) == 1);

    // the obstruction of order 1 is undefined while order 0 persists
    CHECK_THROWS_AS(total_milnor(hopf, 1), Error);
    try {
        total_milnor(hopf, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == Error::Kind::validation);
        CHECK(std::string(e.what()).find("order 0") != std::string::npos);
    }

    // longitudes that cannot come from a link fail the cycle condition
    StringLinkData fake{2, {fw("x2"), fw("")}};
    try {
        total_milnor(fake, 0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == Error::Kind::validation);
        CHECK(std::string(e.what()).find("cycle") != std::string::npos);
    }

    StringLinkData trivial{3, {fw(""), fw(""), fw("")}};
    for (int n = 0; n <= 3; ++n) {
        TotalMilnor t = total_milnor(trivial, n);
        CHECK(t.zero());
        for (const LieElement& part : t.longitude_parts) CHECK(part.zero());
    }
}

TEST_CASE("order two obstruction lands on basic commutators") {
    StringLinkData link{2, {fw("[x2,[x1,x2]]"), fw("[x1,[x1,x2]]^-1")}};
    TotalMilnor t2 = total_milnor(link, 2);
    auto mu = tensor_map(t2.value);
    CHECK(mu.size() == 2);
    CHECK(mu.at({1, "(2,(1,2))"}) == 1);
    CHECK(mu.at({2, "(1,(1,2))"}) == -1);

    // cross-check the same coefficients one word at a time
    CHECK(milnor_mu(link, {2, 1, 2, 1}) == 2);
    CHECK(milnor_mu(link, {2, 2, 1, 1}) == -1);
    CHECK(milnor_mu(link, {1, 2, 2, 1}) == -1);
    CHECK(milnor_mu(link, {1, 1, 2, 2}) == -1);
    CHECK(milnor_mu(link, {1, 2, 1, 2}) == 2);
}

TEST_CASE("halved obstruction of odd order") {
    StringLinkData link{2, {fw("[x2,[x1,x2]]"), fw("[x1,[x1,x2]]^-1")}};
    auto residue = sato_levine(link, 1);
    REQUIRE(residue.size() == 1);
    CHECK(format(residue[0]) == "(1,2)");

    // doubling every longitude doubles the obstruction and kills the residue
    StringLinkData doubled{2,
                           {word_mul(link.longitudes[0], link.longitudes[0]),
                            word_mul(link.longitudes[1], link.longitudes[1])}};
    CHECK(sato_levine(doubled, 1).empty());

    CHECK_THROWS_AS(sato_levine(link, 2), Error);
    CHECK_THROWS_AS(sato_levine(link, -1), Error);
}
