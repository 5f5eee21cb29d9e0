#include "freecons/hnn.hpp"

#include "freecons/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace freecons {

HnnGroup::HnnGroup(FactorGroupPtr base, SubgroupOracle a, SubgroupOracle b,
                   SubgroupMap phi)
    : base_(std::move(base)), sub_{std::move(a), std::move(b)}, phi_(std::move(phi)) {
    for (int i = 0; i < 2; ++i)
        if (sub_[i].ambient().id() != base_->id())
            throw ConfigError("associated subgroup does not live in the base group");
    if (phi_.domain().ambient().id() != base_->id() ||
        phi_.codomain().ambient().id() != base_->id())
        throw ConfigError("phi does not map between subgroups of the base group");
}

HnnWord HnnGroup::identity_word() const {
    HnnWord w;
    w.head = base_->identity();
    return w;
}

bool HnnGroup::is_identity(const HnnWord& w) const {
    return w.syls.empty() && base_->is_identity(w.head);
}

HnnWord HnnGroup::base_word(const Elt& g) const {
    HnnWord w = identity_word();
    append_g(w, g);
    return w;
}

HnnWord HnnGroup::t_word(int eps) const {
    HnnWord w = identity_word();
    append_t(w, eps);
    return w;
}

HnnWord HnnGroup::word_from_letters(const std::vector<HnnLetter>& letters) const {
    HnnWord w = identity_word();
    for (const auto& l : letters) {
        if (l.is_t)
            append_t(w, l.eps);
        else
            append_g(w, l.g);
    }
    return w;
}

Elt HnnGroup::cross_left(const Elt& s, int eps) const {
    // t b = phi^{-1}(b) t  and  t^{-1} a = phi(a) t^{-1}.
    return eps > 0 ? phi_.apply_inverse(s) : phi_.apply(s);
}

void HnnGroup::recanonicalize(HnnWord& w, std::size_t i) const {
    Elt pending = w.syls[i].part;
    for (std::size_t j = i + 1; j-- > 0;) {
        auto [s, r] = side_sub(w.syls[j].eps).coset_split(pending);
        w.syls[j].part = r;
        if (base_->is_identity(s)) return;
        Elt c = cross_left(s, w.syls[j].eps);
        if (j == 0) {
            w.head = base_->mul(w.head, c);
            return;
        }
        pending = base_->mul(w.syls[j - 1].part, c);
    }
}

void HnnGroup::append_g(HnnWord& w, const Elt& g) const {
    if (g.gid != base_->id()) throw ConfigError("letter is not a base-group element");
    if (base_->is_identity(g)) return;
    if (w.syls.empty()) {
        w.head = base_->mul(w.head, g);
        return;
    }
    w.syls.back().part = base_->mul(w.syls.back().part, g);
    recanonicalize(w, w.syls.size() - 1);
}

void HnnGroup::append_t(HnnWord& w, int eps) const {
    if (eps != 1 && eps != -1) throw ConfigError("stable-letter exponent must be +-1");
    if (!w.syls.empty() && w.syls.back().eps == -eps &&
        base_->is_identity(w.syls.back().part)) {
        w.syls.pop_back(); // pinch: the subgroup component already moved left
        return;
    }
    w.syls.push_back(TSyllable{eps, base_->identity()});
}

HnnWord HnnGroup::mul(const HnnWord& x, const HnnWord& y) const {
    HnnWord w = x;
    append_g(w, y.head);
    for (const auto& s : y.syls) {
        append_t(w, s.eps);
        append_g(w, s.part);
    }
    return w;
}

HnnWord HnnGroup::inv(const HnnWord& x) const {
    std::vector<HnnLetter> letters;
    letters.reserve(2 * x.syls.size() + 1);
    for (auto it = x.syls.rbegin(); it != x.syls.rend(); ++it) {
        letters.push_back(HnnLetter::base_letter(base_->inv(it->part)));
        letters.push_back(HnnLetter::t_letter(-it->eps));
    }
    letters.push_back(HnnLetter::base_letter(base_->inv(x.head)));
    return word_from_letters(letters);
}

HnnWord HnnGroup::pow(const HnnWord& x, long long d) const {
    if (d < 0) return pow(inv(x), -d);
    HnnWord acc = identity_word();
    HnnWord base = x;
    while (d > 0) {
        if (d & 1) acc = mul(acc, base);
        d >>= 1;
        if (d > 0) base = mul(base, base);
    }
    return acc;
}

int HnnGroup::compare(const HnnWord& x, const HnnWord& y) const {
    if (x.syls.size() != y.syls.size())
        return x.syls.size() < y.syls.size() ? -1 : 1;
    for (std::size_t i = 0; i < x.syls.size(); ++i)
        if (x.syls[i].eps != y.syls[i].eps)
            return x.syls[i].eps > y.syls[i].eps ? -1 : 1;
    if (int c = compare_elts(*base_, x.head, y.head)) return c;
    for (std::size_t i = 0; i < x.syls.size(); ++i)
        if (int c = compare_elts(*base_, x.syls[i].part, y.syls[i].part)) return c;
    return 0;
}

std::string HnnGroup::format(const HnnWord& w) const {
    if (is_identity(w)) return "1";
    std::ostringstream os;
    bool first = true;
    if (!base_->is_identity(w.head) || w.syls.empty()) {
        os << base_->format(w.head);
        first = false;
    }
    for (const auto& s : w.syls) {
        if (!first) os << " ";
        os << (s.eps > 0 ? "t" : "t^-1");
        first = false;
        if (!base_->is_identity(s.part)) os << " " << base_->format(s.part);
    }
    return os.str();
}

HnnCyclicForm HnnGroup::cyclic_form(const HnnWord& x) const {
    HnnCyclicForm cf{identity_word(), x};
    while (cf.core.t_length() >= 2) {
        int e1 = cf.core.syls.front().eps;
        int en = cf.core.syls.back().eps;
        if (e1 != -en) break;
        Elt wrap = base_->mul(cf.core.syls.back().part, cf.core.head);
        if (!side_sub(en).contains(wrap)) break;
        HnnWord p;
        p.head = cf.core.head;
        p.syls = {TSyllable{e1, base_->identity()}};
        cf.core = mul(mul(inv(p), cf.core), p);
        cf.conjugator = mul(cf.conjugator, p);
    }
    return cf;
}

bool HnnGroup::is_elliptic(const HnnWord& x) const {
    return cyclic_form(x).core.t_length() == 0;
}

std::vector<HnnGroup::EllipticState> HnnGroup::elliptic_orbit(const Elt& f) const {
    std::vector<EllipticState> out;
    auto seen = [&](const Elt& e) {
        for (const auto& st : out)
            if (st.elt == e) return true;
        return false;
    };
    auto [k0, u0] = conjugacy_canonical(*base_, f);
    out.push_back(EllipticState{k0, base_word(u0)});
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        EllipticState st = out[queue.front()];
        queue.pop_front();
        // Class members lying in A or B, each with v: v*elt*v^-1 = m.
        std::vector<std::pair<Elt, Elt>> members;
        switch (base_->kind()) {
        case GroupKind::FiniteTable:
            for (const auto& u : base_->enumerate(0))
                members.emplace_back(base_->mul(base_->mul(u, st.elt), base_->inv(u)), u);
            break;
        case GroupKind::FgAbelian:
            members.emplace_back(st.elt, base_->identity());
            break;
        case GroupKind::Free:
            if (base_->is_identity(st.elt))
                members.emplace_back(st.elt, base_->identity());
            break;
        }
        for (const auto& [m, v] : members) {
            for (int dir = 0; dir < 2; ++dir) {
                // dir 0: m in A, t^{-1} m t = phi(m); dir 1: m in B, t m t^{-1}.
                if (!sub_[dir == 0 ? 0 : 1].contains(m)) continue;
                Elt m2 = dir == 0 ? phi_.apply(m) : phi_.apply_inverse(m);
                auto [k2, u2] = conjugacy_canonical(*base_, m2);
                if (seen(k2)) continue;
                // E(m) = t^{+-1} E(m2) t^{-+1}; fold the witness accordingly.
                HnnWord w2 = mul(mul(mul(st.witness, inv(base_word(v))),
                                     t_word(dir == 0 ? 1 : -1)),
                                 base_word(u2));
                out.push_back(EllipticState{k2, std::move(w2)});
                queue.push_back(out.size() - 1);
            }
        }
    }
    return out;
}

std::optional<HnnWord> HnnGroup::elliptic_conjugator(const Elt& fx, const Elt& fy) const {
    auto orbit = elliptic_orbit(fx);
    auto [ky, uy] = conjugacy_canonical(*base_, fy);
    for (const auto& st : orbit) {
        if (!(st.elt == ky)) continue;
        return mul(base_word(uy), inv(st.witness));
    }
    return std::nullopt;
}

std::optional<HnnWord> HnnGroup::conjugator(const HnnWord& x, const HnnWord& y,
                                            int twist_window) const {
    HnnCyclicForm cx = cyclic_form(x);
    HnnCyclicForm cy = cyclic_form(y);
    std::size_t L = cx.core.t_length();
    if ((L == 0) != (cy.core.t_length() == 0)) return std::nullopt;
    if (L == 0) {
        auto q = elliptic_conjugator(cx.core.head, cy.core.head);
        if (!q) return std::nullopt;
        return mul(mul(cy.conjugator, *q), inv(cx.conjugator));
    }
    if (L != cy.core.t_length()) return std::nullopt;
    // The twist that aligns two rotated cores is a subgroup element whose
    // size is bounded by the core coordinates amplified by at most one
    // subgroup-index factor per stable letter, so for lattice subgroups the
    // sample window is widened with the operands instead of staying fixed.
    int window = twist_window;
    if (base_->kind() == GroupKind::FgAbelian) {
        long long mag = 0;
        auto bump = [&](const Elt& e) {
            for (long long v : std::get<AbelianVec>(e.v))
                mag = std::max(mag, v < 0 ? -v : v);
        };
        bump(cx.core.head);
        bump(cy.core.head);
        for (const auto& s : cx.core.syls) bump(s.part);
        for (const auto& s : cy.core.syls) bump(s.part);
        long long amp = 1ll << std::min<std::size_t>(L, 14);
        window = static_cast<int>(
            std::min<long long>(20000, twist_window + amp * (1 + mag)));
    }
    std::vector<Elt> twists;
    for (int i = 0; i < 2; ++i)
        for (const auto& c : sub_[i].sample_elements(window))
            twists.push_back(c);
    // Rotation cuts of core_y at every t-boundary (both just before and
    // just after each stable letter).
    std::vector<HnnWord> cuts;
    {
        cuts.push_back(identity_word());
        HnnWord q = base_word(cy.core.head);
        cuts.push_back(q);
        for (std::size_t i = 0; i < L; ++i) {
            q = mul(q, t_word(cy.core.syls[i].eps));
            cuts.push_back(q);
            if (i + 1 < L) {
                q = mul(q, base_word(cy.core.syls[i].part));
                cuts.push_back(q);
            }
        }
    }
    for (const auto& qk : cuts) {
        HnnWord rot = mul(mul(inv(qk), cy.core), qk);
        if (rot.t_length() != L) continue;
        bool pattern = true;
        for (std::size_t i = 0; i < L && pattern; ++i)
            pattern = rot.syls[i].eps == cx.core.syls[i].eps;
        if (!pattern) continue;
        for (const auto& c : twists) {
            HnnWord cw = base_word(c);
            if (mul(mul(cw, rot), inv(cw)) == cx.core)
                return mul(mul(mul(cy.conjugator, qk), inv(cw)),
                           inv(cx.conjugator));
        }
    }
    return std::nullopt;
}

std::vector<HnnWord> HnnGroup::dth_roots(const HnnWord& x, long long d,
                                         int search_bound) const {
    if (d < 1) throw ConfigError("root degree must be >= 1");
    if (d == 1) return {x};
    std::vector<HnnWord> out;
    HnnCyclicForm cf = cyclic_form(x);
    std::size_t L = cf.core.t_length();
    if (L >= 1) {
        if (L % static_cast<std::size_t>(d) != 0) return {};
        std::size_t m = L / static_cast<std::size_t>(d);
        bool periodic = true;
        for (std::size_t i = 0; i + m < L && periodic; ++i)
            periodic = cf.core.syls[i].eps == cf.core.syls[i + m].eps;
        if (!periodic) return {};
        // A root keeps its own syllables verbatim as the last block of the
        // power (carries travel leftward only); the head is pinned down by
        // the block junction up to a subgroup element.
        std::vector<TSyllable> tail(cf.core.syls.end() - static_cast<long>(m),
                                    cf.core.syls.end());
        const Elt& r_last = cf.core.syls.back().part;
        const Elt& r_junction = cf.core.syls[L - m - 1].part;
        for (const auto& s : side_sub(cf.core.syls[L - m - 1].eps)
                                 .sample_elements(search_bound)) {
            HnnWord cand;
            cand.head = base_->mul(base_->inv(r_last), base_->mul(s, r_junction));
            cand.syls = tail;
            if (pow(cand, d) == cf.core)
                out.push_back(mul(mul(cf.conjugator, cand), inv(cf.conjugator)));
        }
    } else {
        for (const auto& st : elliptic_orbit(cf.core.head)) {
            for (const auto& r : dth_roots_in_factor(*base_, st.elt, d)) {
                HnnWord v = mul(mul(st.witness, base_word(r)), inv(st.witness));
                v = mul(mul(cf.conjugator, v), inv(cf.conjugator));
                if (pow(v, d) == x) out.push_back(std::move(v));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const HnnWord& a, const HnnWord& b) { return less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Elt> HnnGroup::nonascending_witness(int window) const {
    for (const auto& g : base_->enumerate(window))
        if (!sub_[0].contains(g) && !sub_[1].contains(g)) return g;
    return std::nullopt;
}

HnnWitnessAlpha HnnGroup::witness_alpha(
    long long d, long long n, int escalation,
    std::optional<std::pair<long long, long long>> forced) const {
    if (d < 2) throw ConfigError("witness construction needs d >= 2");
    auto g = nonascending_witness();
    if (!g)
        throw DegenerateError(
            "ascending HNN extension: no element outside A u B found");
    long long a_exp = forced ? forced->first : (d * (n + 4)) << escalation;
    long long b_exp = forced ? forced->second : (d * (3 * n + 4) * (n + 1)) << escalation;
    HnnWord gw = base_word(*g);
    HnnWord t = t_word(1);
    HnnWord gt = mul(gw, t);
    HnnWord block = mul(mul(mul(gw, t), gw), t_word(-1));
    return HnnWitnessAlpha{mul(pow(gt, a_exp), pow(block, b_exp)), *g, a_exp, b_exp};
}

std::vector<HnnWord> HnnGroup::ball(int n, int window, std::size_t cap,
                                    bool* exact) const {
    bool ex = base_->finite();
    std::vector<Elt> heads = base_->enumerate(window);
    std::array<std::vector<Elt>, 2> reps; // [0] after t^{-1} (mod A), [1] after t (mod B)
    for (int i = 0; i < 2; ++i)
        for (const auto& e : base_->enumerate(window))
            if (sub_[i].coset_split(e).second == e) reps[i].push_back(e);
    std::vector<HnnWord> out;
    auto emit = [&](const std::vector<TSyllable>& syls) {
        for (const auto& h : heads) {
            if (out.size() >= cap)
                throw CapError("ball enumeration exceeded the element cap");
            HnnWord w;
            w.head = h;
            w.syls = syls;
            out.push_back(std::move(w));
        }
    };
    std::vector<std::vector<TSyllable>> layer{{}};
    for (int len = 0; len <= n; ++len) {
        for (const auto& syls : layer) emit(syls);
        if (len == n) break;
        std::vector<std::vector<TSyllable>> nxt;
        for (const auto& syls : layer)
            for (int eps : {1, -1}) {
                // A pinch-free extension: the previous part may be trivial
                // only when the exponents agree.
                if (!syls.empty() && syls.back().eps == -eps &&
                    base_->is_identity(syls.back().part))
                    continue;
                for (const auto& r : reps[eps > 0 ? 1 : 0]) {
                    auto s2 = syls;
                    s2.push_back(TSyllable{eps, r});
                    nxt.push_back(std::move(s2));
                }
            }
        layer = std::move(nxt);
    }
    std::sort(out.begin(), out.end(),
              [&](const HnnWord& a, const HnnWord& b) { return less(a, b); });
    if (exact) *exact = ex;
    return out;
}

} // namespace freecons
