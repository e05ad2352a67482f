#include "branchcone/weyl.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace branchcone;

namespace {

struct Fixture {
    RootDatum datum;
    WeylGroup weyl;
    explicit Fixture(const std::string& type)
        : datum(RootDatum::from_type(type)), weyl(datum)
    {
    }
};

} // namespace

TEST_CASE("enumeration sizes")
{
    CHECK(Fixture("A1").weyl.order() == 2);
    CHECK(Fixture("A3").weyl.order() == 24);
    CHECK(Fixture("C3").weyl.order() == 48); // 2^3 * 3!
    CHECK(Fixture("A1xA1").weyl.order() == 4);
}

TEST_CASE("enumeration is by nondecreasing length and hits each element once")
{
    Fixture f("C2");
    const auto& els = f.weyl.elements();
    CHECK(els.size() == 8);
    for (std::size_t i = 1; i < els.size(); ++i)
        CHECK(els[i - 1].length <= els[i].length);
    std::set<std::vector<std::int64_t>> distinct;
    for (const auto& w : els)
        distinct.insert(w.matrix);
    CHECK(distinct.size() == 8);
}

TEST_CASE("action on weights: identity and A1 reflection")
{
    Fixture f("A1");
    Weight omega = f.datum.fundamental_weight(0);
    CHECK(f.weyl.act(f.weyl.identity(), omega).coords == omega.coords);
    CHECK(f.weyl.act(f.weyl.simple_reflection(0), omega).coords == QVec{-1});
}

TEST_CASE("SL4 longest element sends omega1 to -omega3")
{
    Fixture f("A3");
    WeylElement w0 = f.weyl.longest_element();
    CHECK(w0.length == 6);
    Weight img = f.weyl.act(w0, f.datum.fundamental_weight(0));
    CHECK(img.coords == QVec{0, 0, -1});
}

TEST_CASE("length equals word length and deletion/exchange parity")
{
    Fixture f("C2");
    for (const auto& w : f.weyl.elements()) {
        CHECK(w.word.size() == w.length);
        CHECK(f.weyl.from_word(w.word) == w);
        for (std::size_t i = 0; i < f.datum.rank(); ++i) {
            WeylElement s = f.weyl.simple_reflection(i);
            std::size_t l = f.weyl.multiply(s, w).length;
            CHECK((l == w.length + 1 || l + 1 == w.length));
        }
    }
}

TEST_CASE("Bruhat covers below: identity, SL3 top, and brute-force agreement")
{
    Fixture f("A2");
    CHECK(f.weyl.covers_below(f.weyl.identity()).empty());

    WeylElement w0 = f.weyl.longest_element();
    auto covers = f.weyl.covers_below(w0);
    // Below the longest element of SL3: both length-2 elements, via the two
    // simple roots.
    std::size_t simple = 0;
    for (const auto& c : covers) {
        CHECK(c.below.length == 2);
        if (c.simple)
            ++simple;
        // v -> w means w = s_gamma v.
        WeylElement back = f.weyl.multiply(f.weyl.reflection(c.root_index), c.below);
        CHECK(back == w0);
    }
    CHECK(simple == 2);

    // Brute-force scan for simple covers.
    for (const auto& w : f.weyl.elements()) {
        std::set<std::vector<std::size_t>> expected;
        for (const auto& v : f.weyl.elements()) {
            if (v.length + 1 != w.length)
                continue;
            for (std::size_t i = 0; i < f.datum.rank(); ++i)
                if (f.weyl.multiply(f.weyl.simple_reflection(i), v) == w)
                    expected.insert(v.word);
        }
        std::set<std::vector<std::size_t>> got;
        for (const auto& c : f.weyl.covers_below(w))
            if (c.simple)
                got.insert(c.below.word);
        CHECK(got == expected);
    }
}

TEST_CASE("minimal coset representatives")
{
    Fixture f("A3");
    ParabolicSupport all{0, 1, 2};
    CHECK(f.weyl.min_coset_reps(all).size() == 1);
    ParabolicSupport none;
    CHECK(f.weyl.min_coset_reps(none).size() == 24);
    // Stabilizer of delta2 = diag(t,t,t^-1,t^-1) in SL4 is generated by s1, s3;
    // the quotient is Gr(2,4) with 6 Schubert classes.
    ParabolicSupport gr{0, 2};
    auto reps = f.weyl.min_coset_reps(gr);
    CHECK(reps.size() == 6);
    // Tiling: every element factors uniquely as rep * (W_P element) with
    // additive lengths.
    std::map<std::vector<std::size_t>, std::size_t> seen;
    for (const auto& w : f.weyl.elements()) {
        WeylElement m = f.weyl.coset_min_rep(w, gr);
        CHECK(f.weyl.is_min_coset_rep(m, gr));
        WeylElement tail = f.weyl.multiply(f.weyl.inverse(m), w);
        CHECK(m.length + tail.length == w.length);
        seen[m.word] += 1;
    }
    for (const auto& [word, count] : seen)
        CHECK(count == 4); // |W_P| = 4
}

TEST_CASE("stabilizer support")
{
    Fixture f("A3");
    CHECK(f.weyl.stabilizer_support(Coweight{QVec{0, 0, 0}}).size() == 3);
    // Sp(2) -> SL4 image of delta2 has exponents (1,1,-1,-1): x-coords (0,2,0).
    Coweight delta2{QVec{0, 2, 0}};
    ParabolicSupport sup = f.weyl.stabilizer_support(delta2);
    CHECK(sup == ParabolicSupport{0, 2});
    CHECK_THROWS_AS(f.weyl.stabilizer_support(Coweight{QVec{-1, 0, 0}}), InvalidInput);
}

TEST_CASE("dominant conjugator")
{
    Fixture f("A2");
    // Already dominant: identity.
    Coweight rho_vee{QVec{1, 1}};
    auto [e, same] = f.weyl.dominant_conjugator(rho_vee);
    CHECK(e.is_identity());
    CHECK(same.coords == rho_vee.coords);

    // alpha1^vee is antidominant at alpha2: the conjugator is s2 and the
    // image is alpha1^vee + alpha2^vee.
    Coweight coroot1 = f.datum.simple_coroots()[0];
    auto [v, dom] = f.weyl.dominant_conjugator(coroot1);
    CHECK(v.word == std::vector<std::size_t>{1});
    CHECK(f.datum.coroot_coords(dom) == QVec{1, 1});

    // Fully antidominant coweight conjugates by the longest element.
    Coweight anti{QVec{-1, -2}};
    auto [w, dom2] = f.weyl.dominant_conjugator(anti);
    CHECK(w == f.weyl.longest_element());
    CHECK(f.datum.is_dominant_coweight(dom2));

    // Exhaustive minimality: no shorter element dominates.
    for (const auto& u : f.weyl.elements()) {
        if (u.length >= w.length)
            continue;
        CHECK_FALSE(f.datum.is_dominant_coweight(f.weyl.act(u, anti)));
    }
    // The dominant image is independent of the witness element.
    for (const auto& u : f.weyl.elements()) {
        Coweight img = f.weyl.act(u, anti);
        if (f.datum.is_dominant_coweight(img))
            CHECK(img.coords == dom2.coords);
    }
}

TEST_CASE("longest elements")
{
    CHECK(Fixture("A1").weyl.longest_element().length == 1);
    CHECK(Fixture("A3").weyl.longest_element().length == 6);
    Fixture c2("C2");
    WeylElement w0 = c2.weyl.longest_element();
    CHECK(w0.length == 4);
    // C2 has -1 in its Weyl group.
    for (std::size_t i = 0; i < 2; ++i) {
        Weight img = c2.weyl.act(w0, c2.datum.fundamental_weight(i));
        QVec expect(2, 0);
        expect[i] = -1;
        CHECK(img.coords == expect);
    }
    ParabolicSupport sub{0};
    CHECK(c2.weyl.longest_element(sub).length == 1);
}

TEST_CASE("canonical word is the lex-least reduced word")
{
    Fixture f("A2");
    // w0 = s1 s2 s1 = s2 s1 s2: canonical must be the former.
    CHECK(f.weyl.longest_element().word == std::vector<std::size_t>{0, 1, 0});
}

TEST_CASE("word serialization round trip")
{
    CHECK(word_to_string({1, 0, 1}) == "s2 s1 s2");
    CHECK(word_to_string({1}, true) == "s2^");
    CHECK(word_to_string({}) == "e");
    CHECK(word_from_string("s2 s1 s2") == std::vector<std::size_t>{1, 0, 1});
    CHECK(word_from_string("s2^ s3^") == std::vector<std::size_t>{1, 2});
    CHECK(word_from_string("e").empty());
}

TEST_CASE("enumeration budget")
{
    RootDatum d = RootDatum::from_type("A3");
    WeylGroup capped(d, 10);
    CHECK_THROWS_AS(capped.elements(), BudgetError);
}
