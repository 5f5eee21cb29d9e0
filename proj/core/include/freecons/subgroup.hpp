#ifndef FREECONS_SUBGROUP_HPP
#define FREECONS_SUBGROUP_HPP

#include "freecons/factor_group.hpp"
#include "freecons/hermite.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace freecons {

enum class SubgroupKind { Trivial, Enumerated, Lattice };

/// Membership, canonical right-coset representatives, and double-coset
/// equality for a distinguished subgroup A of a factor. Value type; shares
/// ownership of the ambient group.
class SubgroupOracle {
public:
    static SubgroupOracle trivial(FactorGroupPtr ambient);
    static SubgroupOracle enumerated(FactorGroupPtr ambient, std::vector<Elt> elements);
    static SubgroupOracle lattice(FactorGroupPtr ambient, std::vector<AbelianVec> generators);

    SubgroupKind kind() const { return kind_; }
    const FactorGroup& ambient() const { return *ambient_; }
    FactorGroupPtr ambient_ptr() const { return ambient_; }

    bool contains(const Elt& g) const;

    /// Splits g = a * r with a in the subgroup and r the canonical
    /// representative of the right coset A g. Deterministic; r is the
    /// identity iff g is a member.
    std::pair<Elt, Elt> coset_split(const Elt& g) const;

    bool double_coset_equal(const Elt& x, const Elt& y) const;

    /// The subgroup's elements: {identity} for trivial, the explicit list
    /// for enumerated (sorted canonically). Throws for lattice oracles.
    const std::vector<Elt>& elements() const;

    /// Finite sample of subgroup elements within the window; complete for
    /// trivial/enumerated kinds.
    std::vector<Elt> sample_elements(int window) const;

    bool finite() const { return kind_ != SubgroupKind::Lattice || ambient_->finite(); }
    std::size_t size() const; // throws if infinite

    bool is_proper() const;
    /// Index of the subgroup in the ambient group; 0 means infinite.
    long long index() const;
    /// True when every subgroup element commutes with every ambient element
    /// (decidable here: abelian ambient, or finite checks).
    bool central() const;

    const IntLattice& lattice_data() const;

private:
    friend class SubgroupMap;
    SubgroupOracle() = default;
    void validate_enumerated() const;

    SubgroupKind kind_ = SubgroupKind::Trivial;
    FactorGroupPtr ambient_;
    std::vector<Elt> elems_; // trivial: {id}; enumerated: sorted
    std::optional<IntLattice> lattice_;
};

/// Identification isomorphism between two subgroup presentations (the two
/// copies of A in an amalgam, or phi: A -> B in an HNN extension).
class SubgroupMap {
public:
    static SubgroupMap trivial(SubgroupOracle dom, SubgroupOracle cod);
    static SubgroupMap elementwise(SubgroupOracle dom, SubgroupOracle cod,
                                   std::vector<std::pair<Elt, Elt>> pairs);
    /// Lattice-to-lattice map by an integer matrix on generator coefficients:
    /// x = dom_gens * c  |->  cod_gens * (M * c).
    static SubgroupMap lattice_matrix(SubgroupOracle dom, SubgroupOracle cod,
                                      std::vector<AbelianVec> matrix);

    const SubgroupOracle& domain() const { return dom_; }
    const SubgroupOracle& codomain() const { return cod_; }

    Elt apply(const Elt& a) const;
    Elt apply_inverse(const Elt& b) const;

private:
    SubgroupMap() = default;
    void verify() const;

    SubgroupOracle dom_, cod_;
    std::vector<std::pair<Elt, Elt>> pairs_;         // sorted by domain order
    std::vector<std::pair<Elt, Elt>> inverse_pairs_; // sorted by codomain order
    std::vector<AbelianVec> matrix_;                 // columns, coefficient space
    std::optional<IntLattice> matrix_lattice_;       // for apply_inverse
};

} // namespace freecons

#endif
