#ifndef FREECONS_HERMITE_HPP
#define FREECONS_HERMITE_HPP

#include <optional>
#include <vector>

namespace freecons {

using AbelianVec = std::vector<long long>;

/// Integer lattice inside Z^r / (m_1,...,m_r), given by generator columns.
/// Finite moduli are folded in as extra generator columns, so membership
/// and residues are computed in the quotient. Backed by a column-style
/// Hermite echelon form with a tracked transform, which also recovers
/// coefficients of a member in terms of the original generators.
class IntLattice {
public:
    IntLattice(std::vector<AbelianVec> generators, AbelianVec moduli);

    int rows() const { return rows_; }
    std::size_t generator_count() const { return gens_.size(); }
    const std::vector<AbelianVec>& generators() const { return gens_; }

    bool contains(const AbelianVec& v) const;

    /// Canonical coset representative of v + L. Deterministic and constant
    /// on cosets: pivot coordinates reduced into [0, pivot).
    AbelianVec residue(const AbelianVec& v) const;

    /// Coefficients of v in the original generators (ignoring the folded
    /// moduli columns), or nullopt if v is not in the lattice.
    std::optional<AbelianVec> coefficients(const AbelianVec& v) const;

    /// Number of cosets in the ambient quotient, or 0 if infinite.
    long long residue_count() const { return residue_count_; }

    bool full_rank() const { return full_rank_; }

private:
    int rows_;
    std::vector<AbelianVec> gens_;   // original generators only
    AbelianVec moduli_;
    // Echelon columns H with pivot bookkeeping; transform_ maps H-columns
    // back to combinations of [gens | moduli] columns.
    std::vector<AbelianVec> echelon_;            // column-major
    std::vector<AbelianVec> transform_;          // column-major, same count
    std::vector<std::pair<int, std::size_t>> pivots_; // (row, echelon column)
    long long residue_count_ = 0;
    bool full_rank_ = false;
};

} // namespace freecons

#endif
