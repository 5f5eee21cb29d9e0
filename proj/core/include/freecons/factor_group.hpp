#ifndef FREECONS_FACTOR_GROUP_HPP
#define FREECONS_FACTOR_GROUP_HPP

#include "freecons/hermite.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace freecons {

enum class GroupKind { FiniteTable, FgAbelian, Free };

using TableIndex = int;
using FreeWord = std::vector<int>; // reduced letters, +-(i+1) for generator i

/// Element of a single factor group. The owning group id is kept so that
/// mixed-group operands are rejected.
struct Elt {
    unsigned gid = 0;
    std::variant<TableIndex, AbelianVec, FreeWord> v;

    friend bool operator==(const Elt&, const Elt&) = default;
};

class FactorGroup;
using FactorGroupPtr = std::shared_ptr<const FactorGroup>;

/// A concrete factor group: finite by multiplication table, finitely
/// generated abelian by moduli vector, or free of finite rank. Immutable
/// after construction; all operations are pure.
class FactorGroup {
public:
    static constexpr int kMaxTableOrder = 1024;
    static constexpr int kMaxAbelianRank = 8;
    // Associativity is checked on all triples up to this order, sampled above.
    static constexpr int kExhaustiveAssocOrder = 24;

    static FactorGroupPtr finite_table(const std::vector<std::vector<int>>& table,
                                       std::vector<std::string> names = {});
    static FactorGroupPtr fg_abelian(AbelianVec moduli);
    static FactorGroupPtr free_group(int rank);

    GroupKind kind() const { return kind_; }
    unsigned id() const { return gid_; }
    bool finite() const;
    std::size_t order() const; // throws for infinite groups

    Elt identity() const;
    bool is_identity(const Elt& x) const;

    Elt table_element(int index) const;
    Elt abelian_element(AbelianVec coords) const; // reduced mod moduli
    Elt free_element(const FreeWord& letters) const;

    Elt mul(const Elt& x, const Elt& y) const;
    Elt inv(const Elt& x) const;

    /// Canonical total order used for all "minimal" tie-breaks.
    bool less(const Elt& x, const Elt& y) const;

    /// All elements when finite; otherwise the elements within the window
    /// (coordinates of magnitude <= window, or free words of length <=
    /// window). Sorted by the canonical order.
    std::vector<Elt> enumerate(int window) const;
    bool enumeration_exact() const { return finite(); }

    std::string format(const Elt& x) const;

    int table_order() const { return order_; }
    const AbelianVec& moduli() const { return moduli_; }
    int free_rank() const { return rank_; }
    const std::vector<std::string>& names() const { return names_; }

private:
    FactorGroup() = default;
    void check_owned(const Elt& x) const;

    GroupKind kind_ = GroupKind::FiniteTable;
    unsigned gid_ = 0;
    // finite-table
    int order_ = 0;
    std::vector<int> table_; // row-major order_ x order_
    std::vector<int> inverse_;
    int identity_index_ = 0;
    std::vector<std::string> names_;
    // fg-abelian
    AbelianVec moduli_;
    // free
    int rank_ = 0;
};

/// Three-way comparison key helpers shared by word orders.
int compare_elts(const FactorGroup& g, const Elt& x, const Elt& y);

Elt pow_elt(const FactorGroup& g, const Elt& x, long long d);

/// All y with y^d = x, inside the factor itself. Exhaustive scan for finite
/// tables, coordinatewise congruences for fg-abelian, and the unique
/// cyclic-reduction candidate for free groups.
std::vector<Elt> dth_roots_in_factor(const FactorGroup& g, const Elt& x, long long d);

/// Canonical conjugacy representative: returns (k, u) with u k u^-1 = x and
/// k minimal in the conjugacy class (class scan for finite tables, identity
/// conjugator for abelian, cyclic reduction + minimal rotation for free).
std::pair<Elt, Elt> conjugacy_canonical(const FactorGroup& g, const Elt& x);

} // namespace freecons

#endif
