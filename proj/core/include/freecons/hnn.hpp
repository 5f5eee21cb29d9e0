#ifndef FREECONS_HNN_HPP
#define FREECONS_HNN_HPP

#include "freecons/factor_group.hpp"
#include "freecons/subgroup.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freecons {

/// One stable-letter block t^eps followed by a base-group part. Parts after
/// t^{+1} are canonical right-coset representatives mod B, parts after
/// t^{-1} mod A; subgroup components are pushed left across the t-letters.
struct TSyllable {
    int eps = 1; // +1 or -1
    Elt part;

    friend bool operator==(const TSyllable&, const TSyllable&) = default;
};

/// Britton-reduced normal form g0 t^{e1} r1 ... t^{en} rn of an element of
/// G* = <G, t | A^t = B>. t_length = n; no pinch t^{-e} 1 t^{e} occurs.
struct HnnWord {
    Elt head;
    std::vector<TSyllable> syls;

    std::size_t t_length() const { return syls.size(); }

    friend bool operator==(const HnnWord&, const HnnWord&) = default;
};

/// Raw input letter: either t^{eps} or a base-group element.
struct HnnLetter {
    bool is_t = false;
    int eps = 1;
    Elt g;

    static HnnLetter t_letter(int eps) { return HnnLetter{true, eps, {}}; }
    static HnnLetter base_letter(Elt g) { return HnnLetter{false, 1, std::move(g)}; }
};

struct HnnCyclicForm {
    HnnWord conjugator;
    HnnWord core;
};

struct HnnWitnessAlpha {
    HnnWord alpha;
    Elt g;
    long long alpha_exp = 0;
    long long beta_exp = 0;
};

class HnnGroup {
public:
    /// phi : A -> B realizes the relation t^{-1} a t = phi(a).
    HnnGroup(FactorGroupPtr base, SubgroupOracle a, SubgroupOracle b,
             SubgroupMap phi);

    const FactorGroup& base() const { return *base_; }
    FactorGroupPtr base_ptr() const { return base_; }
    const SubgroupOracle& sub_a() const { return sub_[0]; }
    const SubgroupOracle& sub_b() const { return sub_[1]; }
    const SubgroupMap& phi() const { return phi_; }

    HnnWord identity_word() const;
    bool is_identity(const HnnWord& w) const;
    HnnWord base_word(const Elt& g) const;
    HnnWord t_word(int eps) const;
    HnnWord word_from_letters(const std::vector<HnnLetter>& letters) const;

    HnnWord mul(const HnnWord& x, const HnnWord& y) const;
    HnnWord inv(const HnnWord& x) const;
    HnnWord pow(const HnnWord& x, long long d) const;

    /// Canonical order: t_length, then exponent pattern, then head, then parts.
    int compare(const HnnWord& x, const HnnWord& y) const;
    bool less(const HnnWord& x, const HnnWord& y) const { return compare(x, y) < 0; }

    std::string format(const HnnWord& w) const;

    HnnCyclicForm cyclic_form(const HnnWord& x) const;
    bool is_elliptic(const HnnWord& x) const;

    /// A witness c with c x c^-1 = y, or absent. twist_window bounds the
    /// (A u B)-twist sample for infinite subgroups.
    std::optional<HnnWord> conjugator(const HnnWord& x, const HnnWord& y,
                                      int twist_window = 8) const;
    bool are_conjugate(const HnnWord& x, const HnnWord& y,
                       int twist_window = 8) const {
        return conjugator(x, y, twist_window).has_value();
    }

    /// All v with v^d = x found by t-pattern block matching (hyperbolic) or
    /// base-group root solving through A/B-chains (elliptic). Complete for
    /// finite subgroups; windowed by search_bound otherwise.
    std::vector<HnnWord> dth_roots(const HnnWord& x, long long d,
                                   int search_bound) const;
    bool is_dth_power(const HnnWord& x, long long d, int search_bound) const {
        return !dth_roots(x, d, search_bound).empty();
    }

    /// Minimal g in G \ (A u B) within the window, or absent (ascending).
    std::optional<Elt> nonascending_witness(int window = 6) const;

    /// The candidate (gt)^a (g t g t^-1)^b with the same exponent schedule
    /// as the amalgam construction. Throws DegenerateError when ascending.
    HnnWitnessAlpha witness_alpha(long long d, long long n, int escalation = 0,
                                  std::optional<std::pair<long long, long long>>
                                      forced = std::nullopt) const;

    /// All normal forms with t_length <= n, heads and parts within window.
    std::vector<HnnWord> ball(int n, int window, std::size_t cap,
                              bool* exact = nullptr) const;

private:
    void append_g(HnnWord& w, const Elt& g) const;
    void append_t(HnnWord& w, int eps) const;
    /// Re-split part i and push its subgroup component leftward.
    void recanonicalize(HnnWord& w, std::size_t i) const;
    /// Move a subgroup element of S(eps) to the left of t^{eps}.
    Elt cross_left(const Elt& s, int eps) const;
    const SubgroupOracle& side_sub(int eps) const { return sub_[eps > 0 ? 1 : 0]; }

    struct EllipticState {
        Elt elt;
        HnnWord witness; // witness * elt * witness^-1 = origin
    };
    std::vector<EllipticState> elliptic_orbit(const Elt& f) const;
    std::optional<HnnWord> elliptic_conjugator(const Elt& fx, const Elt& fy) const;

    FactorGroupPtr base_;
    std::array<SubgroupOracle, 2> sub_; // [0] = A, [1] = B
    SubgroupMap phi_;
};

} // namespace freecons

#endif
