#include "freecons/subgroup.hpp"

#include "freecons/errors.hpp"

#include <algorithm>

namespace freecons {

namespace {

const AbelianVec& coords(const Elt& e) { return std::get<AbelianVec>(e.v); }

} // namespace

SubgroupOracle SubgroupOracle::trivial(FactorGroupPtr ambient) {
    SubgroupOracle s;
    s.kind_ = SubgroupKind::Trivial;
    s.ambient_ = std::move(ambient);
    s.elems_ = {s.ambient_->identity()};
    return s;
}

SubgroupOracle SubgroupOracle::enumerated(FactorGroupPtr ambient, std::vector<Elt> elements) {
    SubgroupOracle s;
    s.kind_ = SubgroupKind::Enumerated;
    s.ambient_ = std::move(ambient);
    if (s.ambient_->kind() == GroupKind::Free)
        throw UnsupportedError("free factors support only the trivial subgroup");
    s.elems_ = std::move(elements);
    std::sort(s.elems_.begin(), s.elems_.end(),
              [&](const Elt& a, const Elt& b) { return s.ambient_->less(a, b); });
    s.elems_.erase(std::unique(s.elems_.begin(), s.elems_.end()), s.elems_.end());
    if (s.elems_.empty()) throw ConfigError("enumerated subgroup is empty");
    s.validate_enumerated();
    return s;
}

SubgroupOracle SubgroupOracle::lattice(FactorGroupPtr ambient, std::vector<AbelianVec> generators) {
    SubgroupOracle s;
    s.kind_ = SubgroupKind::Lattice;
    s.ambient_ = std::move(ambient);
    if (s.ambient_->kind() != GroupKind::FgAbelian)
        throw UnsupportedError("lattice subgroups require an fg-abelian ambient group");
    s.lattice_.emplace(std::move(generators), s.ambient_->moduli());
    return s;
}

void SubgroupOracle::validate_enumerated() const {
    bool has_id = false;
    for (const auto& a : elems_) {
        if (ambient_->is_identity(a)) has_id = true;
        if (!std::binary_search(elems_.begin(), elems_.end(), ambient_->inv(a),
                                [&](const Elt& x, const Elt& y) { return ambient_->less(x, y); }))
            throw ConfigError("enumerated subgroup not closed under inversion");
        for (const auto& b : elems_) {
            if (!std::binary_search(elems_.begin(), elems_.end(), ambient_->mul(a, b),
                                    [&](const Elt& x, const Elt& y) { return ambient_->less(x, y); }))
                throw ConfigError("enumerated subgroup not closed under multiplication");
        }
    }
    if (!has_id) throw ConfigError("enumerated subgroup does not contain the identity");
}

bool SubgroupOracle::contains(const Elt& g) const {
    switch (kind_) {
    case SubgroupKind::Trivial:
        return ambient_->is_identity(g);
    case SubgroupKind::Enumerated:
        return std::binary_search(elems_.begin(), elems_.end(), g,
                                  [&](const Elt& x, const Elt& y) { return ambient_->less(x, y); });
    case SubgroupKind::Lattice:
        return lattice_->contains(coords(g));
    }
    return false;
}

std::pair<Elt, Elt> SubgroupOracle::coset_split(const Elt& g) const {
    switch (kind_) {
    case SubgroupKind::Trivial:
        return {ambient_->identity(), g};
    case SubgroupKind::Enumerated: {
        if (contains(g)) return {g, ambient_->identity()};
        // Canonical representative: minimal element of the coset A g.
        Elt best = g;
        for (const auto& a : elems_) {
            Elt cand = ambient_->mul(a, g);
            if (ambient_->less(cand, best)) best = cand;
        }
        Elt rest = ambient_->mul(g, ambient_->inv(best));
        return {rest, best};
    }
    case SubgroupKind::Lattice: {
        Elt r = ambient_->abelian_element(lattice_->residue(coords(g)));
        Elt a = ambient_->mul(g, ambient_->inv(r));
        return {a, r};
    }
    }
    return {ambient_->identity(), g};
}

bool SubgroupOracle::double_coset_equal(const Elt& x, const Elt& y) const {
    switch (kind_) {
    case SubgroupKind::Trivial:
        return x == y;
    case SubgroupKind::Enumerated:
        for (const auto& a : elems_)
            for (const auto& b : elems_)
                if (ambient_->mul(ambient_->mul(a, x), b) == y) return true;
        return false;
    case SubgroupKind::Lattice:
        // Ambient abelian: double coset = single coset.
        return lattice_->contains(coords(ambient_->mul(ambient_->inv(x), y)));
    }
    return false;
}

const std::vector<Elt>& SubgroupOracle::elements() const {
    if (kind_ == SubgroupKind::Lattice)
        throw UnsupportedError("lattice subgroup has no finite element list");
    return elems_;
}

std::vector<Elt> SubgroupOracle::sample_elements(int window) const {
    if (kind_ != SubgroupKind::Lattice) return elems_;
    std::vector<Elt> out;
    const auto& gens = lattice_->generators();
    std::vector<AbelianVec> acc{AbelianVec(static_cast<std::size_t>(lattice_->rows()), 0)};
    for (const auto& g : gens) {
        std::vector<AbelianVec> next;
        for (const auto& p : acc)
            for (long long c = -window; c <= window; ++c) {
                AbelianVec q = p;
                for (std::size_t i = 0; i < q.size(); ++i) q[i] += c * g[i];
                next.push_back(std::move(q));
            }
        acc = std::move(next);
    }
    for (auto& v : acc) out.push_back(ambient_->abelian_element(std::move(v)));
    std::sort(out.begin(), out.end(),
              [&](const Elt& a, const Elt& b) { return ambient_->less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t SubgroupOracle::size() const {
    if (kind_ == SubgroupKind::Lattice) {
        if (!ambient_->finite()) throw UnsupportedError("infinite subgroup");
        std::size_t n = ambient_->order();
        long long idx = lattice_->residue_count();
        return idx > 0 ? n / static_cast<std::size_t>(idx) : 0;
    }
    return elems_.size();
}

bool SubgroupOracle::is_proper() const {
    switch (kind_) {
    case SubgroupKind::Trivial:
        return !ambient_->finite() || ambient_->order() > 1;
    case SubgroupKind::Enumerated:
        return !ambient_->finite() || elems_.size() < ambient_->order();
    case SubgroupKind::Lattice:
        return lattice_->residue_count() != 1;
    }
    return false;
}

long long SubgroupOracle::index() const {
    switch (kind_) {
    case SubgroupKind::Trivial:
        return ambient_->finite() ? static_cast<long long>(ambient_->order()) : 0;
    case SubgroupKind::Enumerated:
        return ambient_->finite()
                   ? static_cast<long long>(ambient_->order() / elems_.size())
                   : 0;
    case SubgroupKind::Lattice:
        return lattice_->residue_count();
    }
    return 0;
}

bool SubgroupOracle::central() const {
    if (ambient_->kind() == GroupKind::FgAbelian) return true;
    if (ambient_->kind() == GroupKind::Free) return kind_ == SubgroupKind::Trivial;
    auto all = ambient_->enumerate(0);
    for (const auto& a : elems_)
        for (const auto& g : all)
            if (ambient_->mul(a, g) != ambient_->mul(g, a)) return false;
    return true;
}

const IntLattice& SubgroupOracle::lattice_data() const {
    if (kind_ != SubgroupKind::Lattice)
        throw UnsupportedError("not a lattice subgroup");
    return *lattice_;
}

SubgroupMap SubgroupMap::trivial(SubgroupOracle dom, SubgroupOracle cod) {
    if (dom.kind() != SubgroupKind::Trivial || cod.kind() != SubgroupKind::Trivial)
        throw ConfigError("trivial identification requires trivial subgroups");
    SubgroupMap m;
    m.dom_ = std::move(dom);
    m.cod_ = std::move(cod);
    return m;
}

SubgroupMap SubgroupMap::elementwise(SubgroupOracle dom, SubgroupOracle cod,
                                     std::vector<std::pair<Elt, Elt>> pairs) {
    if (dom.kind() == SubgroupKind::Lattice || cod.kind() == SubgroupKind::Lattice)
        throw ConfigError("elementwise identification requires enumerated subgroups");
    SubgroupMap m;
    m.dom_ = std::move(dom);
    m.cod_ = std::move(cod);
    m.pairs_ = std::move(pairs);
    const auto& dg = m.dom_.ambient();
    const auto& cg = m.cod_.ambient();
    std::sort(m.pairs_.begin(), m.pairs_.end(),
              [&](const auto& a, const auto& b) { return dg.less(a.first, b.first); });
    m.inverse_pairs_.reserve(m.pairs_.size());
    for (const auto& [a, b] : m.pairs_) m.inverse_pairs_.emplace_back(b, a);
    std::sort(m.inverse_pairs_.begin(), m.inverse_pairs_.end(),
              [&](const auto& a, const auto& b) { return cg.less(a.first, b.first); });
    m.verify();
    return m;
}

SubgroupMap SubgroupMap::lattice_matrix(SubgroupOracle dom, SubgroupOracle cod,
                                        std::vector<AbelianVec> matrix) {
    if (dom.kind() != SubgroupKind::Lattice || cod.kind() != SubgroupKind::Lattice)
        throw ConfigError("matrix identification requires lattice subgroups");
    SubgroupMap m;
    m.dom_ = std::move(dom);
    m.cod_ = std::move(cod);
    // matrix is given row-major over coefficient space; store as columns.
    std::size_t nd = m.dom_.lattice_data().generator_count();
    std::size_t nc = m.cod_.lattice_data().generator_count();
    if (matrix.size() != nc)
        throw ConfigError("identification matrix has wrong row count");
    for (const auto& row : matrix)
        if (row.size() != nd) throw ConfigError("identification matrix has wrong column count");
    m.matrix_.assign(nd, AbelianVec(nc, 0));
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < nd; ++j) m.matrix_[j][i] = matrix[i][j];
    m.matrix_lattice_.emplace(m.matrix_, AbelianVec(nc, 0));
    m.verify();
    return m;
}

Elt SubgroupMap::apply(const Elt& a) const {
    switch (dom_.kind()) {
    case SubgroupKind::Trivial:
        return cod_.ambient().identity();
    case SubgroupKind::Enumerated: {
        auto it = std::lower_bound(pairs_.begin(), pairs_.end(), a,
                                   [&](const auto& p, const Elt& x) {
                                       return dom_.ambient().less(p.first, x);
                                   });
        if (it == pairs_.end() || !(it->first == a))
            throw ConfigError("identification map applied outside its domain");
        return it->second;
    }
    case SubgroupKind::Lattice: {
        auto c = dom_.lattice_data().coefficients(std::get<AbelianVec>(a.v));
        if (!c) throw ConfigError("identification map applied outside its domain");
        std::size_t nc = cod_.lattice_data().generator_count();
        AbelianVec out(static_cast<std::size_t>(cod_.lattice_data().rows()), 0);
        AbelianVec cc(nc, 0);
        for (std::size_t j = 0; j < matrix_.size(); ++j)
            for (std::size_t i = 0; i < nc; ++i) cc[i] += (*c)[j] * matrix_[j][i];
        const auto& gens = cod_.lattice_data().generators();
        for (std::size_t i = 0; i < nc; ++i)
            for (std::size_t r = 0; r < out.size(); ++r) out[r] += cc[i] * gens[i][r];
        return cod_.ambient().abelian_element(std::move(out));
    }
    }
    return {};
}

Elt SubgroupMap::apply_inverse(const Elt& b) const {
    switch (dom_.kind()) {
    case SubgroupKind::Trivial:
        return dom_.ambient().identity();
    case SubgroupKind::Enumerated: {
        auto it = std::lower_bound(inverse_pairs_.begin(), inverse_pairs_.end(), b,
                                   [&](const auto& p, const Elt& x) {
                                       return cod_.ambient().less(p.first, x);
                                   });
        if (it == inverse_pairs_.end() || !(it->first == b))
            throw ConfigError("identification map inverse applied outside its image");
        return it->second;
    }
    case SubgroupKind::Lattice: {
        auto c = cod_.lattice_data().coefficients(std::get<AbelianVec>(b.v));
        if (!c) throw ConfigError("identification map inverse applied outside its image");
        auto pre = matrix_lattice_->coefficients(*c);
        if (!pre) throw ConfigError("identification matrix is not invertible on this element");
        const auto& gens = dom_.lattice_data().generators();
        AbelianVec out(static_cast<std::size_t>(dom_.lattice_data().rows()), 0);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t r = 0; r < out.size(); ++r) out[r] += (*pre)[i] * gens[i][r];
        return dom_.ambient().abelian_element(std::move(out));
    }
    }
    return {};
}

void SubgroupMap::verify() const {
    if (dom_.kind() == SubgroupKind::Enumerated) {
        if (pairs_.size() != dom_.elements().size() ||
            pairs_.size() != cod_.elements().size())
            throw ConfigError("identification map is not total or not surjective");
        for (const auto& [a, b] : pairs_) {
            if (!dom_.contains(a) || !cod_.contains(b))
                throw ConfigError("identification pair outside the subgroups");
        }
        for (std::size_t i = 0; i + 1 < inverse_pairs_.size(); ++i)
            if (inverse_pairs_[i].first == inverse_pairs_[i + 1].first)
                throw ConfigError("identification map is not injective");
        // Homomorphism on all pairs (subgroups are small by construction).
        for (const auto& [a, fa] : pairs_)
            for (const auto& [b, fb] : pairs_) {
                Elt ab = dom_.ambient().mul(a, b);
                if (apply(ab) != cod_.ambient().mul(fa, fb))
                    throw ConfigError("identification map is not a homomorphism");
            }
    } else if (dom_.kind() == SubgroupKind::Lattice) {
        // Round-trip on generators of both sides.
        for (const auto& g : dom_.lattice_data().generators()) {
            Elt x = dom_.ambient().abelian_element(g);
            Elt y = apply(x);
            if (!cod_.contains(y) || apply_inverse(y) != x)
                throw ConfigError("identification matrix is not an isomorphism on generators");
        }
        for (const auto& g : cod_.lattice_data().generators()) {
            Elt y = cod_.ambient().abelian_element(g);
            Elt x = apply_inverse(y); // throws if no preimage
            if (apply(x) != y)
                throw ConfigError("identification matrix is not surjective onto the codomain");
        }
    }
}

} // namespace freecons
