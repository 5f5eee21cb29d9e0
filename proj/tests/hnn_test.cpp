#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecons/errors.hpp"
#include "freecons/hnn.hpp"

#include "support/instances.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace freecons;
using namespace freecons::testing;

namespace {

HnnWord a_pow(const HnnGroup& S, long long k) {
    return S.base_word(S.base().abelian_element({k}));
}

std::vector<HnnLetter> random_hnn_letters(const HnnGroup& S, std::mt19937& rng,
                                          int len, int window) {
    std::vector<HnnLetter> out;
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long long> coord(-window, window);
    for (int i = 0; i < len; ++i) {
        switch (kind(rng)) {
        case 0: out.push_back(HnnLetter::t_letter(1)); break;
        case 1: out.push_back(HnnLetter::t_letter(-1)); break;
        default:
            out.push_back(HnnLetter::base_letter(
                S.base().abelian_element({coord(rng)})));
        }
    }
    return out;
}

} // namespace

TEST_CASE("BS(2,3): the defining relation holds") {
    auto S = make_bs23();
    auto t = S.t_word(1);
    auto ti = S.t_word(-1);
    // t^-1 a^2 t = a^3.
    auto lhs = S.mul(S.mul(ti, a_pow(S, 2)), t);
    CHECK(lhs == a_pow(S, 3));
    // And the inverse direction: t a^3 t^-1 = a^2.
    CHECK(S.mul(S.mul(t, a_pow(S, 3)), ti) == a_pow(S, 2));
    CHECK(S.mul(t, ti) == S.identity_word());
    CHECK(S.mul(ti, t) == S.identity_word());
}

TEST_CASE("Britton reduction: pinches collapse, non-pinches stay") {
    auto S = make_bs23();
    auto t = S.t_word(1);
    auto ti = S.t_word(-1);
    // t^-1 a^2 t is a pinch (a^2 in A): t-length 0.
    CHECK(S.mul(S.mul(ti, a_pow(S, 2)), t).t_length() == 0);
    // t^-1 a t is not (a not in A): t-length 2.
    CHECK(S.mul(S.mul(ti, a_pow(S, 1)), t).t_length() == 2);
    // t a t^-1 is not a pinch (a not in B).
    CHECK(S.mul(S.mul(t, a_pow(S, 1)), ti).t_length() == 2);
    // t a^3 t^-1 is (a^3 in B).
    CHECK(S.mul(S.mul(t, a_pow(S, 3)), ti).t_length() == 0);
}

TEST_CASE("group axioms on random words") {
    auto S = make_bs23();
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto x = S.word_from_letters(random_hnn_letters(S, rng, 6, 4));
        auto y = S.word_from_letters(random_hnn_letters(S, rng, 6, 4));
        auto z = S.word_from_letters(random_hnn_letters(S, rng, 4, 4));
        CHECK(S.mul(S.mul(x, y), z) == S.mul(x, S.mul(y, z)));
        CHECK(S.is_identity(S.mul(x, S.inv(x))));
        CHECK(S.inv(S.mul(x, y)) == S.mul(S.inv(y), S.inv(x)));
        CHECK(S.mul(x, y).t_length() <= x.t_length() + y.t_length());
        CHECK(S.inv(x).t_length() == x.t_length());
        CHECK(S.pow(x, 3) == S.mul(x, S.mul(x, x)));
    }
}

TEST_CASE("normal forms are pinch-free with canonical parts") {
    auto S = make_bs23();
    std::mt19937 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        auto w = S.word_from_letters(random_hnn_letters(S, rng, 7, 5));
        for (std::size_t i = 0; i < w.syls.size(); ++i) {
            const auto& sub = w.syls[i].eps > 0 ? S.sub_b() : S.sub_a();
            // part is a canonical coset representative: splitting is a no-op.
            CHECK(sub.coset_split(w.syls[i].part).second == w.syls[i].part);
            if (i + 1 < w.syls.size() && w.syls[i + 1].eps == -w.syls[i].eps)
                CHECK(!S.base().is_identity(w.syls[i].part));
        }
    }
}

TEST_CASE("Britton's lemma at small scale: reduced spellings are nontrivial") {
    auto S = make_bs23();
    // Every word with t-letters and no pinch is != 1; spot-check t-length 2.
    auto t = S.t_word(1);
    auto ti = S.t_word(-1);
    for (long long mid = -2; mid <= 2; ++mid) {
        auto w = S.mul(S.mul(ti, a_pow(S, mid)), t); // pinch iff mid in 2Z
        if (mid % 2 != 0) CHECK(!S.is_identity(w));
        auto v = S.mul(S.mul(t, a_pow(S, mid)), ti); // pinch iff mid in 3Z
        if (mid % 3 != 0) CHECK(!S.is_identity(v));
    }
}

TEST_CASE("cyclic reduction in BS(2,3)") {
    auto S = make_bs23();
    auto t = S.t_word(1);
    auto x = S.mul(S.mul(a_pow(S, 5), t), a_pow(S, -5)); // a^5 t a^-5
    auto cf = S.cyclic_form(x);
    CHECK(S.mul(S.mul(cf.conjugator, cf.core), S.inv(cf.conjugator)) == x);
    CHECK(cf.core.t_length() == 1);
    CHECK(!S.is_elliptic(x));
    CHECK(S.is_elliptic(a_pow(S, 9)));
    CHECK(S.is_elliptic(S.mul(S.mul(t, a_pow(S, 3)), S.t_word(-1))));
}

TEST_CASE("conjugacy: positives carry verified witnesses") {
    auto S = make_bs23();
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        auto x = S.word_from_letters(random_hnn_letters(S, rng, 4, 3));
        auto w = S.word_from_letters(random_hnn_letters(S, rng, 3, 3));
        auto y = S.mul(S.mul(w, x), S.inv(w));
        auto c = S.conjugator(x, y);
        REQUIRE(c.has_value());
        CHECK(S.mul(S.mul(*c, x), S.inv(*c)) == y);
    }
    // t and g t g^-1 with g = a: a twist from B (c = -3) is required.
    auto t = S.t_word(1);
    auto y = S.mul(S.mul(a_pow(S, 1), t), a_pow(S, -1));
    auto c = S.conjugator(t, y);
    REQUIRE(c.has_value());
    CHECK(S.mul(S.mul(*c, t), S.inv(*c)) == y);
    // Mixed types are never conjugate.
    CHECK(!S.are_conjugate(a_pow(S, 1), t));
}

TEST_CASE("elliptic conjugacy through the stable letter") {
    auto S = make_bs23();
    // a^2 and a^3 are conjugate (by t); a and a^2 are not (parity of the
    // 2-adic/3-adic ladder).
    auto c = S.conjugator(a_pow(S, 2), a_pow(S, 3));
    REQUIRE(c.has_value());
    CHECK(S.mul(S.mul(*c, a_pow(S, 2)), S.inv(*c)) == a_pow(S, 3));
    CHECK(!S.are_conjugate(a_pow(S, 1), a_pow(S, 2)));
    CHECK(!S.are_conjugate(a_pow(S, 1), a_pow(S, -1)));
}

TEST_CASE("dth_roots in BS(2,3)") {
    auto S = make_bs23();
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        auto v = S.word_from_letters(random_hnn_letters(S, rng, 3, 3));
        for (long long d : {2, 3}) {
            auto x = S.pow(v, d);
            auto roots = S.dth_roots(x, d, 6);
            bool found = std::any_of(roots.begin(), roots.end(),
                                     [&](const HnnWord& r) { return r == v; });
            CHECK(found);
            for (const auto& r : roots) CHECK(S.pow(r, d) == x);
        }
    }
    // a has no square root in BS(2,3).
    CHECK(S.dth_roots(a_pow(S, 1), 2, 8).empty());
    CHECK(S.dth_roots(a_pow(S, 2), 2, 8).size() == 1);
}

TEST_CASE("non-ascending witness and witness_alpha") {
    auto S = make_bs23();
    auto g = S.nonascending_witness();
    REQUIRE(g.has_value());
    CHECK(!S.sub_a().contains(*g));
    CHECK(!S.sub_b().contains(*g));

    auto wa = S.witness_alpha(2, 0);
    CHECK(wa.alpha_exp == 2 * 4);
    CHECK(wa.beta_exp == 2 * 4 * 1);
    CHECK(!S.is_elliptic(wa.alpha));
    auto forced = S.witness_alpha(2, 0, 0, std::make_pair(5ll, 2ll));
    CHECK(forced.alpha_exp == 5);
    CHECK(forced.beta_exp == 2);
}

TEST_CASE("ball enumeration") {
    auto S = make_bs23();
    bool exact = true;
    auto b0 = S.ball(0, 2, 1000, &exact);
    CHECK(b0.size() == 5); // heads -2..2
    CHECK(!exact);         // Z is only windowed
    auto b1 = S.ball(1, 2, 100000);
    CHECK(std::is_sorted(b1.begin(), b1.end(),
                         [&](const HnnWord& x, const HnnWord& y) {
                             return S.less(x, y);
                         }));
    CHECK(std::adjacent_find(b1.begin(), b1.end()) == b1.end());
    // Every t-length-1 member really has one stable letter.
    std::size_t with_t = 0;
    for (const auto& w : b1) with_t += w.t_length();
    CHECK(with_t == b1.size() - b0.size());
    CHECK_THROWS_AS(S.ball(2, 3, 10), CapError);
}

TEST_CASE("format") {
    auto S = make_bs23();
    CHECK(S.format(S.identity_word()) == "1");
    auto w = S.mul(S.mul(a_pow(S, 1), S.t_word(1)), a_pow(S, 1));
    auto s = S.format(w);
    CHECK(s.find('t') != std::string::npos);
}
