#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecons/amalgam.hpp"
#include "freecons/errors.hpp"

#include "support/instances.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace freecons;
using namespace freecons::testing;

namespace {

// A random letter sequence over both factors, identity letters allowed.
std::vector<Letter> random_letters(const AmalgamGroup& P, std::mt19937& rng,
                                   int len) {
    std::vector<Letter> out;
    std::uniform_int_distribution<int> side_dist(0, 1);
    for (int i = 0; i < len; ++i) {
        int side = side_dist(rng);
        auto elems = P.factor(side).enumerate(2);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        out.push_back({side, elems[pick(rng)]});
    }
    return out;
}

} // namespace

TEST_CASE("Z/2 * Z/3: normal forms and lengths") {
    auto P = make_z2z3();
    auto a = P.factor_word(0, P.factor(0).abelian_element({1}));
    auto b = P.factor_word(1, P.factor(1).abelian_element({1}));
    CHECK(P.factor_word(0, P.factor(0).identity()) == P.identity_word());
    CHECK(a.length() == 1);
    CHECK(P.mul(a, a) == P.identity_word());
    CHECK(P.mul(b, P.mul(b, b)) == P.identity_word());
    auto ab = P.mul(a, b);
    CHECK(ab.length() == 2);
    CHECK(P.mul(ab, P.inv(ab)) == P.identity_word());
    CHECK(P.pow(ab, 3).length() == 6);
}

TEST_CASE("normal form is invariant under relator insertion") {
    auto P = make_z2z3();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto letters = random_letters(P, rng, 8);
        auto w = P.word_from_letters(letters);
        // Insert g g^-1 at a random position.
        std::uniform_int_distribution<std::size_t> pos_dist(0, letters.size());
        std::uniform_int_distribution<int> side_dist(0, 1);
        auto padded = letters;
        int side = side_dist(rng);
        auto elems = P.factor(side).enumerate(2);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        Elt g = elems[pick(rng)];
        std::size_t pos = pos_dist(rng);
        padded.insert(padded.begin() + pos, {side, P.factor(side).inv(g)});
        padded.insert(padded.begin() + pos, {side, g});
        CHECK(P.word_from_letters(padded) == w);
    }
}

TEST_CASE("group axioms on random words (Z/2 * Z/3 and S3 amalgam)") {
    std::mt19937 rng(11);
    for (const AmalgamGroup& P : {make_z2z3(), make_s3_amalgam()}) {
        for (int trial = 0; trial < 150; ++trial) {
            auto x = P.word_from_letters(random_letters(P, rng, 5));
            auto y = P.word_from_letters(random_letters(P, rng, 5));
            auto z = P.word_from_letters(random_letters(P, rng, 5));
            CHECK(P.mul(P.mul(x, y), z) == P.mul(x, P.mul(y, z)));
            CHECK(P.mul(x, P.inv(x)) == P.identity_word());
            CHECK(P.inv(P.mul(x, y)) == P.mul(P.inv(y), P.inv(x)));
            CHECK(P.mul(x, y).length() <= x.length() + y.length());
            CHECK(P.inv(x).length() == x.length());
            CHECK(P.pow(x, 3) == P.mul(x, P.mul(x, x)));
        }
    }
}

TEST_CASE("S3 amalgam: coset-representative syllables never lie in A") {
    auto P = make_s3_amalgam();
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        auto w = P.word_from_letters(random_letters(P, rng, 6));
        for (std::size_t i = 0; i < w.syls.size(); ++i) {
            CHECK(!P.subgroup(w.syls[i].side).contains(w.syls[i].rep));
            if (i + 1 < w.syls.size()) CHECK(w.syls[i].side != w.syls[i + 1].side);
        }
    }
}

TEST_CASE("cyclic reduction: minimal length over small conjugations") {
    std::mt19937 rng(17);
    for (const AmalgamGroup& P : {make_z2z3(), make_s3_amalgam()}) {
        bool exact = false;
        auto b3 = P.ball(3, 2, 1u << 20, &exact);
        REQUIRE(exact);
        auto b2 = P.ball(2, 2, 1u << 20);
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<std::size_t> pick(0, b3.size() - 1);
            auto x = b3[pick(rng)];
            auto cf = P.cyclic_form(x);
            CHECK(P.mul(P.mul(cf.conjugator, cf.core), P.inv(cf.conjugator)) == x);
            std::size_t best = x.length();
            for (const auto& w : b2)
                best = std::min(best, P.mul(P.mul(w, x), P.inv(w)).length());
            CHECK(cf.core.length() <= best);
            bool reduced = cf.core.length() <= 1 ||
                           cf.core.syls.front().side != cf.core.syls.back().side;
            CHECK(reduced);
        }
    }
}

TEST_CASE("ellipticity in Z/2 * Z/3") {
    auto P = make_z2z3();
    auto a = P.factor_word(0, P.factor(0).abelian_element({1}));
    auto b = P.factor_word(1, P.factor(1).abelian_element({1}));
    CHECK(P.is_elliptic(a));
    CHECK(P.is_elliptic(P.identity_word()));
    CHECK(P.is_elliptic(P.mul(a, P.mul(b, P.inv(a))))); // conjugate into H
    CHECK(!P.is_elliptic(P.mul(a, b)));
}

TEST_CASE("conjugacy against brute force") {
    std::mt19937 rng(19);
    for (const AmalgamGroup& P : {make_z2z3(), make_s3_amalgam()}) {
        auto b3 = P.ball(3, 2, 1u << 20);
        auto b2 = P.ball(2, 2, 1u << 20);
        std::uniform_int_distribution<std::size_t> p3(0, b3.size() - 1);
        std::uniform_int_distribution<std::size_t> p2(0, b2.size() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            auto x = b3[p3(rng)];
            auto w = b2[p2(rng)];
            auto y = P.mul(P.mul(w, x), P.inv(w));
            auto c = P.conjugator(x, y);
            REQUIRE(c.has_value());
            CHECK(P.mul(P.mul(*c, x), P.inv(*c)) == y);
        }
        // Soundness: a negative answer must not be refuted by a B2 witness.
        for (int trial = 0; trial < 25; ++trial) {
            auto x = b3[p3(rng)];
            auto y = b3[p3(rng)];
            if (!P.are_conjugate(x, y)) CHECK(!brute_conjugate(P, b2, x, y));
        }
    }
}

TEST_CASE("dth_roots equals brute force over the ball") {
    std::mt19937 rng(23);
    for (const AmalgamGroup& P :
         {make_z2z3(), make_s3_amalgam(), make_central(1)}) {
        auto b2 = P.ball(2, 2, 1u << 20);
        auto b4 = P.ball(4, 3, 1u << 21);
        std::uniform_int_distribution<std::size_t> pick(0, b2.size() - 1);
        for (int trial = 0; trial < 25; ++trial) {
            auto v = b2[pick(rng)];
            for (long long d : {2, 3}) {
                auto x = P.pow(v, d);
                auto mine = P.dth_roots(x, d, 3);
                for (const auto& r : mine) CHECK(P.pow(r, d) == x);
                // Completeness is promised for hyperbolic x; elliptic root
                // searches are windowed.
                if (P.is_elliptic(x)) {
                    CHECK(!mine.empty()); // v's class is always reached
                    continue;
                }
                auto brute = brute_roots(P, b4, x, d);
                for (const auto& r : brute) {
                    bool found = std::any_of(mine.begin(), mine.end(),
                                             [&](const AmalgamWord& m) { return m == r; });
                    CHECK(found);
                }
            }
        }
    }
}

TEST_CASE("root counts: central law and malnormal law") {
    auto Pm = make_s3_amalgam();
    auto hyp = Pm.mul(Pm.factor_word(0, Pm.factor(0).table_element(1)),
                      Pm.factor_word(1, Pm.factor(1).table_element(2)));
    REQUIRE(!Pm.is_elliptic(hyp));
    for (long long d : {2, 3}) {
        auto roots = Pm.dth_roots(Pm.pow(hyp, d), d, 4);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == hyp);
    }

    for (int k : {1, 2}) {
        auto Pc = make_central(k);
        AbelianVec vg(1 + k, 0), vh(1 + k, 0);
        vg[0] = 1;
        vh[k] = 1;
        auto g1 = Pc.factor_word(0, Pc.factor(0).abelian_element(vg));
        auto h1 = Pc.factor_word(1, Pc.factor(1).abelian_element(vh));
        auto w = Pc.mul(g1, h1);
        REQUIRE(!Pc.is_elliptic(w));
        CHECK(Pc.dth_roots(Pc.pow(w, 2), 2, 4).size() == (1u << k));
        CHECK(Pc.dth_roots(Pc.pow(w, 3), 3, 4).size() == 1);
    }
}

TEST_CASE("centralizer_in_A") {
    auto Pm = make_s3_amalgam();
    auto x = Pm.mul(Pm.factor_word(0, Pm.factor(0).table_element(1)),
                    Pm.factor_word(1, Pm.factor(1).table_element(2)));
    auto cm = Pm.centralizer_in_A(x);
    REQUIRE(cm.size() == 1);
    CHECK(Pm.factor(0).is_identity(cm[0]));

    auto Pc = make_central(2);
    auto w = Pc.mul(Pc.factor_word(0, Pc.factor(0).abelian_element({1, 0, 0})),
                    Pc.factor_word(1, Pc.factor(1).abelian_element({0, 0, 1})));
    CHECK(Pc.centralizer_in_A(w).size() == 4);
}

TEST_CASE("witness triples and degeneracy") {
    auto Pz = make_z2z3();
    auto strong = Pz.nondegenerate_witnesses();
    REQUIRE(strong.has_value());
    CHECK(strong->strong);
    CHECK(!Pz.degenerate());

    auto Ps = make_s3_amalgam();
    // One nontrivial double coset only: no strong triple, but a weak one.
    CHECK(!Ps.nondegenerate_witnesses().has_value());
    auto weak = Ps.witness_triple();
    REQUIRE(weak.has_value());
    CHECK(!weak->strong);
    CHECK(!Ps.degenerate());

    auto Pd = make_dihedral();
    CHECK(Pd.degenerate());
    CHECK_THROWS_AS(Pd.witness_alpha(2, 0), DegenerateError);
}

TEST_CASE("witness_alpha: schedule, forcing, hyperbolicity") {
    auto P = make_z2z3();
    auto wa = P.witness_alpha(2, 1);
    CHECK(wa.alpha_exp == 2 * (1 + 4));
    CHECK(wa.beta_exp == 2 * (3 * 1 + 4) * (1 + 1));
    CHECK(!P.is_elliptic(wa.alpha));

    auto forced = P.witness_alpha(2, 0, 0, std::make_pair(4ll, 3ll));
    CHECK(forced.alpha_exp == 4);
    CHECK(forced.beta_exp == 3);

    auto esc = P.witness_alpha(2, 1, 2);
    CHECK(esc.alpha_exp == wa.alpha_exp * 4);
    CHECK(esc.beta_exp == wa.beta_exp * 4);
}

TEST_CASE("ball enumeration: counts, order, cap") {
    auto P = make_z2z3();
    bool exact = false;
    auto b0 = P.ball(0, 4, 100, &exact);
    CHECK(b0.size() == 1);
    CHECK(exact);
    CHECK(P.ball(1, 4, 100).size() == 4);  // 1, a, b, b^2
    CHECK(P.ball(2, 4, 100).size() == 8);  // + ab, ab^2, ba, b^2 a
    CHECK(P.ball(3, 4, 100).size() == 14); // + 2 GHG + 4 HGH
    auto b3 = P.ball(3, 4, 100);
    CHECK(std::is_sorted(b3.begin(), b3.end(),
                         [&](const AmalgamWord& x, const AmalgamWord& y) {
                             return P.less(x, y);
                         }));
    CHECK_THROWS_AS(P.ball(3, 4, 5), CapError);
}

TEST_CASE("free factors: windowed ball and basic algebra") {
    auto P = make_f2_f2();
    auto x = P.factor_word(0, P.factor(0).free_element({1, 2}));
    auto y = P.factor_word(1, P.factor(1).free_element({1}));
    auto w = P.mul(x, y);
    CHECK(w.length() == 2);
    CHECK(P.mul(w, P.inv(w)) == P.identity_word());
    bool exact = true;
    auto b1 = P.ball(1, 1, 1u << 20, &exact);
    CHECK(!exact); // free factors are only sampled
    CHECK(b1.size() == 9); // 1 + two factors x four length-1 words
}

TEST_CASE("format is stable and reparses visually") {
    auto P = make_s3_amalgam();
    CHECK(P.format(P.identity_word()) == "1");
    auto w = P.mul(P.factor_word(0, P.factor(0).table_element(1)),
                   P.factor_word(1, P.factor(1).table_element(2)));
    CHECK(P.format(w).find("G:") != std::string::npos);
    CHECK(P.format(w).find("H:") != std::string::npos);
}
