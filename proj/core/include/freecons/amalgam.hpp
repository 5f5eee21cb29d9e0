#ifndef FREECONS_AMALGAM_HPP
#define FREECONS_AMALGAM_HPP

#include "freecons/factor_group.hpp"
#include "freecons/subgroup.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freecons {

/// One alternating factor letter of a normal form. rep is a nontrivial
/// canonical right-coset representative in the factor named by side.
struct Syllable {
    int side = 0; // 0 = G, 1 = H
    Elt rep;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Normal form in G *_A H: an A-prefix (stored in G's copy) followed by
/// strictly alternating nontrivial coset representatives.
struct AmalgamWord {
    Elt prefix;
    std::vector<Syllable> syls;

    std::size_t length() const { return syls.size(); }

    friend bool operator==(const AmalgamWord&, const AmalgamWord&) = default;
};

/// A raw input letter: an arbitrary element of one factor.
struct Letter {
    int side = 0;
    Elt g;
};

/// x = conjugator * core * conjugator^-1 with core cyclically reduced
/// (length <= 1, or extremal syllables in different factors).
struct CyclicForm {
    AmalgamWord conjugator;
    AmalgamWord core;
};

/// Witness data for the non-degeneracy construction: g on one side, h and
/// h' on the other, all outside A. strong means AhA != Ah'A.
struct WitnessTriple {
    int g_side = 0;
    Elt g, h, hp;
    bool strong = false;
};

struct WitnessAlpha {
    AmalgamWord alpha;
    long long alpha_exp = 0;
    long long beta_exp = 0;
};

class AmalgamGroup {
public:
    /// ident maps the copy of A inside G (side 0) onto the copy inside H.
    AmalgamGroup(FactorGroupPtr g, FactorGroupPtr h,
                 SubgroupOracle a_in_g, SubgroupOracle a_in_h,
                 SubgroupMap ident);

    const FactorGroup& factor(int side) const { return *factors_[side]; }
    FactorGroupPtr factor_ptr(int side) const { return factors_[side]; }
    const SubgroupOracle& subgroup(int side) const { return sub_[side]; }
    const SubgroupMap& identification() const { return ident_; }

    /// Carry an A-element (given in the copy on from_side) to the other copy.
    Elt across(const Elt& a, int from_side) const;

    AmalgamWord identity_word() const;
    bool is_identity(const AmalgamWord& w) const;
    AmalgamWord factor_word(int side, const Elt& g) const;
    AmalgamWord word_from_letters(const std::vector<Letter>& letters) const;

    AmalgamWord mul(const AmalgamWord& x, const AmalgamWord& y) const;
    AmalgamWord inv(const AmalgamWord& x) const;
    AmalgamWord pow(const AmalgamWord& x, long long d) const;

    /// Canonical total order on normal forms: length, then side pattern,
    /// then prefix, then syllable representatives.
    int compare(const AmalgamWord& x, const AmalgamWord& y) const;
    bool less(const AmalgamWord& x, const AmalgamWord& y) const {
        return compare(x, y) < 0;
    }

    std::string format(const AmalgamWord& w) const;

    CyclicForm cyclic_form(const AmalgamWord& x) const;
    bool is_elliptic(const AmalgamWord& x) const;

    /// A witness c with c x c^-1 = y, or absent.
    std::optional<AmalgamWord> conjugator(const AmalgamWord& x,
                                          const AmalgamWord& y) const;
    bool are_conjugate(const AmalgamWord& x, const AmalgamWord& y) const {
        return conjugator(x, y).has_value();
    }

    /// All v with v^d = x; duplicate-free and sorted. Complete for finite
    /// or trivial A; elliptic roots inside infinite factors are solved
    /// directly (abelian, free) and A-chains are searched exhaustively
    /// when A is finite. search_bound windows subgroup samples.
    std::vector<AmalgamWord> dth_roots(const AmalgamWord& x, long long d,
                                       int search_bound) const;
    bool is_dth_power(const AmalgamWord& x, long long d, int search_bound) const {
        return !dth_roots(x, d, search_bound).empty();
    }

    /// C_A(x) as elements of the side-0 copy of A. Requires hyperbolic x.
    std::vector<Elt> centralizer_in_A(const AmalgamWord& x) const;

    /// Strong witnesses: g in G\A, h,h' in H\A with AhA != Ah'A (either
    /// orientation), or absent.
    std::optional<WitnessTriple> nondegenerate_witnesses(int window = 4) const;
    /// Strong witnesses when they exist, else a weak pair (h != h', both
    /// outside A), or absent.
    std::optional<WitnessTriple> witness_triple(int window = 4) const;
    /// Degenerate: no weak pair at all, or A of index <= 2 in both factors
    /// (dihedral-like, where translates of the elliptic set cover P).
    bool degenerate(int window = 4) const;

    /// The candidate (gh)^a (g h' g h'^-1)^b. Schedule: a0 = d(n+4),
    /// b0 = d(3n+4)(n+1), escalation doubles both. forced overrides both
    /// exponents. Throws DegenerateError for degenerate P.
    WitnessAlpha witness_alpha(long long d, long long n, int escalation = 0,
                               std::optional<std::pair<long long, long long>>
                                   forced = std::nullopt) const;

    /// All normal forms of length <= n (factor elements within window for
    /// infinite factors). Sorted; sets *exact when enumeration is complete.
    std::vector<AmalgamWord> ball(int n, int window, std::size_t cap,
                                  bool* exact = nullptr) const;

    /// A-elements used for twist searches, in the side-0 copy.
    std::vector<Elt> twist_elements(int window) const;

private:
    /// Append one letter on the right, maintaining normal form.
    void append(AmalgamWord& w, int side, const Elt& g) const;
    /// Carry an A-element (in the copy matching the side of syllable i+1's
    /// neighbour) leftward from just after syllable index i into the prefix.
    void carry_left(AmalgamWord& w, std::size_t upto, Elt a, int a_side) const;

    /// Elliptic conjugacy search over (side, element) states; returns c
    /// with c x c^-1 = y. Throws for infinite non-abelian factors.
    std::optional<AmalgamWord> elliptic_conjugator(int sx, const Elt& fx,
                                                   int sy, const Elt& fy) const;
    /// All (side, element, witness q) with q * state * q^-1 = the given
    /// elliptic element, explored through A-crossings.
    struct EllipticState {
        int side;
        Elt elt;
        AmalgamWord witness; // witness * elt * witness^-1 = origin
    };
    std::vector<EllipticState> elliptic_orbit(int side, const Elt& f) const;

    std::array<FactorGroupPtr, 2> factors_;
    std::array<SubgroupOracle, 2> sub_;
    SubgroupMap ident_; // side-0 copy -> side-1 copy
};

} // namespace freecons

#endif
