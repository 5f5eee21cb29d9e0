#include "freecons/amalgam.hpp"

#include "freecons/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace freecons {

AmalgamGroup::AmalgamGroup(FactorGroupPtr g, FactorGroupPtr h,
                           SubgroupOracle a_in_g, SubgroupOracle a_in_h,
                           SubgroupMap ident)
    : factors_{std::move(g), std::move(h)},
      sub_{std::move(a_in_g), std::move(a_in_h)},
      ident_(std::move(ident)) {
    for (int s = 0; s < 2; ++s) {
        if (sub_[s].ambient().id() != factors_[s]->id())
            throw ConfigError("subgroup oracle does not live in its factor");
        if (!sub_[s].is_proper())
            throw ConfigError("amalgamated subgroup must be proper in both factors");
    }
    if (ident_.domain().ambient().id() != factors_[0]->id() ||
        ident_.codomain().ambient().id() != factors_[1]->id())
        throw ConfigError("identification map does not match the two copies of A");
}

Elt AmalgamGroup::across(const Elt& a, int from_side) const {
    return from_side == 0 ? ident_.apply(a) : ident_.apply_inverse(a);
}

AmalgamWord AmalgamGroup::identity_word() const {
    AmalgamWord w;
    w.prefix = factors_[0]->identity();
    return w;
}

bool AmalgamGroup::is_identity(const AmalgamWord& w) const {
    return w.syls.empty() && factors_[0]->is_identity(w.prefix);
}

AmalgamWord AmalgamGroup::factor_word(int side, const Elt& g) const {
    AmalgamWord w = identity_word();
    append(w, side, g);
    return w;
}

AmalgamWord AmalgamGroup::word_from_letters(const std::vector<Letter>& letters) const {
    AmalgamWord w = identity_word();
    for (const auto& l : letters) append(w, l.side, l.g);
    return w;
}

void AmalgamGroup::carry_left(AmalgamWord& w, std::size_t upto, Elt a, int a_side) const {
    for (std::size_t i = upto; i-- > 0;) {
        if (factors_[a_side]->is_identity(a)) return;
        int s = w.syls[i].side;
        Elt c = (a_side == s) ? a : across(a, a_side);
        auto [a2, r2] = sub_[s].coset_split(factors_[s]->mul(w.syls[i].rep, c));
        w.syls[i].rep = r2; // r2 != id: rep outside A times an A-element stays outside
        a = a2;
        a_side = s;
    }
    Elt c0 = (a_side == 0) ? a : across(a, 1);
    w.prefix = factors_[0]->mul(w.prefix, c0);
}

void AmalgamGroup::append(AmalgamWord& w, int side, const Elt& g) const {
    if (side != 0 && side != 1) throw ConfigError("bad factor tag");
    if (g.gid != factors_[side]->id())
        throw ConfigError("letter element does not belong to the tagged factor");
    if (factors_[side]->is_identity(g)) return;
    Elt x = g;
    if (!w.syls.empty() && w.syls.back().side == side) {
        x = factors_[side]->mul(w.syls.back().rep, g);
        w.syls.pop_back();
        if (factors_[side]->is_identity(x)) return;
    } else if (w.syls.empty()) {
        Elt p = (side == 0) ? w.prefix : across(w.prefix, 0);
        x = factors_[side]->mul(p, g);
        w.prefix = factors_[0]->identity();
        if (factors_[side]->is_identity(x)) return;
    }
    auto [a, r] = sub_[side].coset_split(x);
    if (!factors_[side]->is_identity(r)) {
        w.syls.push_back(Syllable{side, r});
        carry_left(w, w.syls.size() - 1, a, side);
    } else {
        carry_left(w, w.syls.size(), x, side);
    }
}

AmalgamWord AmalgamGroup::mul(const AmalgamWord& x, const AmalgamWord& y) const {
    AmalgamWord w = x;
    append(w, 0, y.prefix);
    for (const auto& s : y.syls) append(w, s.side, s.rep);
    return w;
}

AmalgamWord AmalgamGroup::inv(const AmalgamWord& x) const {
    std::vector<Letter> letters;
    letters.reserve(x.syls.size() + 1);
    for (auto it = x.syls.rbegin(); it != x.syls.rend(); ++it)
        letters.push_back(Letter{it->side, factors_[it->side]->inv(it->rep)});
    letters.push_back(Letter{0, factors_[0]->inv(x.prefix)});
    return word_from_letters(letters);
}

AmalgamWord AmalgamGroup::pow(const AmalgamWord& x, long long d) const {
    if (d < 0) return pow(inv(x), -d);
    AmalgamWord acc = identity_word();
    AmalgamWord base = x;
    while (d > 0) {
        if (d & 1) acc = mul(acc, base);
        d >>= 1;
        if (d > 0) base = mul(base, base);
    }
    return acc;
}

int AmalgamGroup::compare(const AmalgamWord& x, const AmalgamWord& y) const {
    if (x.syls.size() != y.syls.size())
        return x.syls.size() < y.syls.size() ? -1 : 1;
    for (std::size_t i = 0; i < x.syls.size(); ++i)
        if (x.syls[i].side != y.syls[i].side)
            return x.syls[i].side < y.syls[i].side ? -1 : 1;
    if (int c = compare_elts(*factors_[0], x.prefix, y.prefix)) return c;
    for (std::size_t i = 0; i < x.syls.size(); ++i)
        if (int c = compare_elts(*factors_[x.syls[i].side], x.syls[i].rep,
                                 y.syls[i].rep))
            return c;
    return 0;
}

std::string AmalgamGroup::format(const AmalgamWord& w) const {
    if (is_identity(w)) return "1";
    std::ostringstream os;
    bool first = true;
    if (!factors_[0]->is_identity(w.prefix)) {
        os << "A:" << factors_[0]->format(w.prefix);
        first = false;
    }
    for (const auto& s : w.syls) {
        if (!first) os << " ";
        os << (s.side == 0 ? "G:" : "H:") << factors_[s.side]->format(s.rep);
        first = false;
    }
    return os.str();
}

CyclicForm AmalgamGroup::cyclic_form(const AmalgamWord& x) const {
    CyclicForm cf{identity_word(), x};
    while (cf.core.length() >= 2 &&
           cf.core.syls.front().side == cf.core.syls.back().side) {
        AmalgamWord p;
        p.prefix = cf.core.prefix;
        p.syls = {cf.core.syls.front()};
        cf.core = mul(mul(inv(p), cf.core), p);
        cf.conjugator = mul(cf.conjugator, p);
    }
    // A single syllable may still be conjugate into A inside its own factor
    // (length 0 is attainable then); fold that case for finite factors so
    // the core length is the true minimum over all conjugates. Abelian
    // factors conjugate trivially and free factors only meet a trivial A,
    // so no further reduction exists there.
    if (cf.core.length() == 1) {
        int s = cf.core.syls[0].side;
        const FactorGroup& F = *factors_[s];
        if (F.finite()) {
            Elt p = (s == 0) ? cf.core.prefix : across(cf.core.prefix, 0);
            Elt f = F.mul(p, cf.core.syls[0].rep);
            for (const auto& u : F.enumerate(0)) {
                Elt m = F.mul(F.mul(u, f), F.inv(u));
                if (!sub_[s].contains(m)) continue;
                AmalgamWord folded = identity_word();
                folded.prefix = (s == 0) ? m : ident_.apply_inverse(m);
                cf.conjugator = mul(cf.conjugator, factor_word(s, F.inv(u)));
                cf.core = std::move(folded);
                break;
            }
        }
    }
    return cf;
}

bool AmalgamGroup::is_elliptic(const AmalgamWord& x) const {
    return cyclic_form(x).core.length() <= 1;
}

std::vector<Elt> AmalgamGroup::twist_elements(int window) const {
    return sub_[0].kind() == SubgroupKind::Lattice ? sub_[0].sample_elements(window)
                                                   : sub_[0].elements();
}

namespace {

// (side, factor element) carried by an elliptic core of length <= 1.
std::pair<int, Elt> elliptic_elt(const AmalgamGroup& P, const AmalgamWord& core) {
    if (core.syls.empty()) return {0, core.prefix};
    int s = core.syls[0].side;
    Elt p = (s == 0) ? core.prefix : P.across(core.prefix, 0);
    return {s, P.factor(s).mul(p, core.syls[0].rep)};
}

} // namespace

std::vector<AmalgamGroup::EllipticState>
AmalgamGroup::elliptic_orbit(int side, const Elt& f) const {
    // States are factor-canonical conjugacy representatives tagged by side;
    // each carries a word w with w * state * w^-1 = the original element.
    std::vector<EllipticState> out;
    auto seen = [&](int s, const Elt& e) {
        for (const auto& st : out)
            if (st.side == s && st.elt == e) return true;
        return false;
    };
    auto [k0, u0] = conjugacy_canonical(*factors_[side], f);
    out.push_back(EllipticState{side, k0, factor_word(side, u0)});
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t idx = queue.front();
        queue.pop_front();
        EllipticState st = out[idx];
        int s = st.side;
        const FactorGroup& F = *factors_[s];
        // Class members lying in A, each with v such that v*elt*v^-1 = m.
        std::vector<std::pair<Elt, Elt>> crossers; // (m, v)
        switch (F.kind()) {
        case GroupKind::FiniteTable:
            for (const auto& u : F.enumerate(0)) {
                Elt m = F.mul(F.mul(u, st.elt), F.inv(u));
                if (sub_[s].contains(m)) crossers.emplace_back(m, u);
            }
            break;
        case GroupKind::FgAbelian:
            if (sub_[s].contains(st.elt))
                crossers.emplace_back(st.elt, F.identity());
            break;
        case GroupKind::Free:
            if (F.is_identity(st.elt))
                crossers.emplace_back(st.elt, F.identity());
            break;
        }
        for (const auto& [m, v] : crossers) {
            int s2 = 1 - s;
            Elt m2 = across(m, s);
            auto [k2, u2] = conjugacy_canonical(*factors_[s2], m2);
            if (seen(s2, k2)) continue;
            // w * elt * w^-1 = origin and v * elt * v^-1 = m = m2 = u2 k2 u2^-1,
            // so (w v^-1 u2) k2 (...)^-1 = origin.
            AmalgamWord w2 = mul(mul(st.witness, inv(factor_word(s, v))),
                                 factor_word(s2, u2));
            out.push_back(EllipticState{s2, k2, std::move(w2)});
            queue.push_back(out.size() - 1);
        }
    }
    return out;
}

std::optional<AmalgamWord>
AmalgamGroup::elliptic_conjugator(int sx, const Elt& fx, int sy, const Elt& fy) const {
    // Want q with q * (sx,fx) * q^-1 = (sy,fy).
    auto orbit = elliptic_orbit(sx, fx);
    auto [ky, uy] = conjugacy_canonical(*factors_[sy], fy);
    for (const auto& st : orbit) {
        if (st.side != sy || !(st.elt == ky)) continue;
        // st.witness * ky * st.witness^-1 = fx-word, fy = uy ky uy^-1.
        return mul(factor_word(sy, uy), inv(st.witness));
    }
    return std::nullopt;
}

std::optional<AmalgamWord>
AmalgamGroup::conjugator(const AmalgamWord& x, const AmalgamWord& y) const {
    CyclicForm cx = cyclic_form(x);
    CyclicForm cy = cyclic_form(y);
    std::size_t L = cx.core.length();
    bool ex = L <= 1, ey = cy.core.length() <= 1;
    if (ex != ey) return std::nullopt;
    if (ex) {
        auto [sx, fx] = elliptic_elt(*this, cx.core);
        auto [sy, fy] = elliptic_elt(*this, cy.core);
        auto q = elliptic_conjugator(sx, fx, sy, fy);
        if (!q) return std::nullopt;
        return mul(mul(cy.conjugator, *q), inv(cx.conjugator));
    }
    if (L != cy.core.length()) return std::nullopt;
    auto twists = twist_elements(4);
    for (std::size_t k = 0; k < L; ++k) {
        AmalgamWord p;
        p.prefix = cy.core.prefix;
        p.syls.assign(cy.core.syls.begin(),
                      cy.core.syls.begin() + static_cast<long>(k));
        AmalgamWord rot = mul(mul(inv(p), cy.core), p);
        if (rot.length() != L) continue;
        bool pattern = true;
        for (std::size_t i = 0; i < L && pattern; ++i)
            pattern = rot.syls[i].side == cx.core.syls[i].side;
        if (!pattern) continue;
        for (const auto& a : twists) {
            AmalgamWord aw = factor_word(0, a);
            if (mul(mul(aw, rot), inv(aw)) == cx.core) {
                // a rot a^-1 = core_x and core_y = p rot p^-1, so
                // y = (cy p a^-1 cx^-1) x (...)^-1.
                return mul(mul(mul(cy.conjugator, p), inv(aw)),
                           inv(cx.conjugator));
            }
        }
    }
    return std::nullopt;
}

std::vector<AmalgamWord>
AmalgamGroup::dth_roots(const AmalgamWord& x, long long d, int search_bound) const {
    if (d < 1) throw ConfigError("root degree must be >= 1");
    if (d == 1) return {x};
    std::vector<AmalgamWord> out;
    CyclicForm cf = cyclic_form(x);
    std::size_t L = cf.core.length();
    if (L >= 2) {
        if (L % static_cast<std::size_t>(d) != 0) return {};
        std::size_t m = L / static_cast<std::size_t>(d);
        // A root v is cyclically reduced of length m, and the normal form
        // of v^d keeps v's syllables verbatim as its last block (carries
        // only travel leftward). So the candidate syllables are fixed and
        // only the A-prefix varies.
        if (m % 2 != 0) return {}; // odd length cannot be cyclically reduced
        for (const auto& p : twist_elements(search_bound)) {
            AmalgamWord cand;
            cand.prefix = p;
            cand.syls.assign(cf.core.syls.end() - static_cast<long>(m),
                             cf.core.syls.end());
            if (pow(cand, d) == cf.core)
                out.push_back(mul(mul(cf.conjugator, cand), inv(cf.conjugator)));
        }
    } else {
        auto [s, f] = elliptic_elt(*this, cf.core);
        for (const auto& st : elliptic_orbit(s, f)) {
            for (const auto& r :
                 dth_roots_in_factor(*factors_[st.side], st.elt, d)) {
                AmalgamWord v = mul(mul(st.witness, factor_word(st.side, r)),
                                    inv(st.witness));
                v = mul(mul(cf.conjugator, v), inv(cf.conjugator));
                if (pow(v, d) == x) out.push_back(std::move(v));
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const AmalgamWord& a, const AmalgamWord& b) {
        return less(a, b);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Elt> AmalgamGroup::centralizer_in_A(const AmalgamWord& x) const {
    std::vector<Elt> out;
    for (const auto& a : twist_elements(4)) {
        AmalgamWord aw = factor_word(0, a);
        if (mul(aw, x) == mul(x, aw)) out.push_back(a);
    }
    return out;
}

std::optional<WitnessTriple> AmalgamGroup::nondegenerate_witnesses(int window) const {
    for (int gs = 0; gs < 2; ++gs) {
        int hs = 1 - gs;
        std::vector<Elt> gcand, hcand;
        for (const auto& e : factors_[gs]->enumerate(window))
            if (!sub_[gs].contains(e)) gcand.push_back(e);
        for (const auto& e : factors_[hs]->enumerate(window))
            if (!sub_[hs].contains(e)) hcand.push_back(e);
        if (gcand.empty()) continue;
        for (std::size_t i = 0; i < hcand.size(); ++i)
            for (std::size_t j = i + 1; j < hcand.size(); ++j)
                if (!sub_[hs].double_coset_equal(hcand[i], hcand[j]))
                    return WitnessTriple{gs, gcand[0], hcand[i], hcand[j], true};
    }
    return std::nullopt;
}

std::optional<WitnessTriple> AmalgamGroup::witness_triple(int window) const {
    if (auto strong = nondegenerate_witnesses(window)) return strong;
    for (int gs = 0; gs < 2; ++gs) {
        int hs = 1 - gs;
        std::vector<Elt> gcand, hcand;
        for (const auto& e : factors_[gs]->enumerate(window))
            if (!sub_[gs].contains(e)) gcand.push_back(e);
        for (const auto& e : factors_[hs]->enumerate(window))
            if (!sub_[hs].contains(e)) hcand.push_back(e);
        if (!gcand.empty() && hcand.size() >= 2)
            return WitnessTriple{gs, gcand[0], hcand[0], hcand[1], false};
    }
    return std::nullopt;
}

bool AmalgamGroup::degenerate(int window) const {
    if (!witness_triple(window)) return true;
    long long i0 = sub_[0].index();
    long long i1 = sub_[1].index();
    return i0 != 0 && i0 <= 2 && i1 != 0 && i1 <= 2;
}

WitnessAlpha AmalgamGroup::witness_alpha(
    long long d, long long n, int escalation,
    std::optional<std::pair<long long, long long>> forced) const {
    if (d < 2) throw ConfigError("witness construction needs d >= 2");
    if (degenerate())
        throw DegenerateError("degenerate amalgam: no witness construction");
    auto t = witness_triple();
    long long a_exp = forced ? forced->first : (d * (n + 4)) << escalation;
    long long b_exp = forced ? forced->second : (d * (3 * n + 4) * (n + 1)) << escalation;
    AmalgamWord gw = factor_word(t->g_side, t->g);
    AmalgamWord hw = factor_word(1 - t->g_side, t->h);
    AmalgamWord hpw = factor_word(1 - t->g_side, t->hp);
    AmalgamWord gh = mul(gw, hw);
    AmalgamWord block = mul(mul(mul(gw, hpw), gw), inv(hpw));
    return WitnessAlpha{mul(pow(gh, a_exp), pow(block, b_exp)), a_exp, b_exp};
}

std::vector<AmalgamWord>
AmalgamGroup::ball(int n, int window, std::size_t cap, bool* exact) const {
    bool ex = factors_[0]->finite() && factors_[1]->finite();
    std::vector<Elt> prefixes;
    if (sub_[0].kind() == SubgroupKind::Lattice) {
        prefixes = sub_[0].sample_elements(window);
        ex = false;
    } else {
        prefixes = sub_[0].elements();
    }
    std::array<std::vector<Elt>, 2> reps;
    for (int s = 0; s < 2; ++s)
        for (const auto& e : factors_[s]->enumerate(window)) {
            if (factors_[s]->is_identity(e)) continue;
            if (sub_[s].coset_split(e).second == e) reps[s].push_back(e);
        }
    std::vector<AmalgamWord> out;
    auto emit = [&](const std::vector<Syllable>& syls) {
        for (const auto& p : prefixes) {
            if (out.size() >= cap)
                throw CapError("ball enumeration exceeded the element cap");
            AmalgamWord w;
            w.prefix = p;
            w.syls = syls;
            out.push_back(std::move(w));
        }
    };
    emit({});
    for (int start = 0; start < 2; ++start) {
        std::vector<std::vector<Syllable>> layer;
        for (const auto& r : reps[start])
            layer.push_back({Syllable{start, r}});
        for (int len = 1; len <= n && !layer.empty(); ++len) {
            for (const auto& syls : layer) emit(syls);
            if (len == n) break;
            int next_side = (start + len) % 2;
            std::vector<std::vector<Syllable>> nxt;
            for (const auto& syls : layer)
                for (const auto& r : reps[next_side]) {
                    auto s2 = syls;
                    s2.push_back(Syllable{next_side, r});
                    nxt.push_back(std::move(s2));
                }
            layer = std::move(nxt);
        }
    }
    std::sort(out.begin(), out.end(), [&](const AmalgamWord& a, const AmalgamWord& b) {
        return less(a, b);
    });
    if (exact) *exact = ex;
    return out;
}

} // namespace freecons
