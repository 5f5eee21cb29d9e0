#include "freecons/hermite.hpp"

#include "freecons/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace freecons {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

IntLattice::IntLattice(std::vector<AbelianVec> generators, AbelianVec moduli)
    : rows_(static_cast<int>(moduli.size())),
      gens_(std::move(generators)),
      moduli_(std::move(moduli)) {
    for (const auto& g : gens_)
        if (static_cast<int>(g.size()) != rows_)
            throw ConfigError("lattice generator has wrong dimension");

    // Working columns: generators followed by moduli columns.
    std::vector<AbelianVec> cols = gens_;
    for (int i = 0; i < rows_; ++i) {
        if (moduli_[i] > 0) {
            AbelianVec e(rows_, 0);
            e[i] = moduli_[i];
            cols.push_back(e);
        }
    }
    std::vector<AbelianVec> tf(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        tf[j] = AbelianVec(cols.size(), 0);
        tf[j][j] = 1;
    }

    std::size_t next = 0; // first unprocessed column
    for (int r = 0; r < rows_ && next < cols.size(); ++r) {
        // Gcd-eliminate row r across columns [next, end).
        for (;;) {
            std::size_t best = cols.size();
            for (std::size_t j = next; j < cols.size(); ++j) {
                if (cols[j][r] == 0) continue;
                if (best == cols.size() ||
                    std::llabs(cols[j][r]) < std::llabs(cols[best][r]))
                    best = j;
            }
            if (best == cols.size()) break; // row is zero, no pivot
            std::swap(cols[next], cols[best]);
            std::swap(tf[next], tf[best]);
            bool clean = true;
            for (std::size_t j = next + 1; j < cols.size(); ++j) {
                if (cols[j][r] == 0) continue;
                long long q = cols[j][r] / cols[next][r];
                for (int i = 0; i < rows_; ++i) cols[j][i] -= q * cols[next][i];
                for (std::size_t i = 0; i < tf[j].size(); ++i)
                    tf[j][i] -= q * tf[next][i];
                if (cols[j][r] != 0) clean = false;
            }
            if (clean) break;
        }
        if (next < cols.size() && cols[next][r] != 0) {
            if (cols[next][r] < 0) {
                for (auto& x : cols[next]) x = -x;
                for (auto& x : tf[next]) x = -x;
            }
            pivots_.emplace_back(r, next);
            ++next;
        }
    }

    echelon_ = std::move(cols);
    transform_ = std::move(tf);
    full_rank_ = (static_cast<int>(pivots_.size()) == rows_);
    if (full_rank_) {
        residue_count_ = 1;
        for (auto [r, c] : pivots_) residue_count_ *= echelon_[c][r];
    }
}

bool IntLattice::contains(const AbelianVec& v) const {
    return coefficients(v).has_value();
}

AbelianVec IntLattice::residue(const AbelianVec& v) const {
    AbelianVec x = v;
    for (auto [r, c] : pivots_) {
        long long q = floor_div(x[r], echelon_[c][r]);
        if (q != 0)
            for (int i = 0; i < rows_; ++i) x[i] -= q * echelon_[c][i];
    }
    return x;
}

std::optional<AbelianVec> IntLattice::coefficients(const AbelianVec& v) const {
    AbelianVec x = v;
    AbelianVec coef(transform_.empty() ? gens_.size() : transform_[0].size(), 0);
    for (auto [r, c] : pivots_) {
        if (x[r] % echelon_[c][r] != 0) return std::nullopt;
        long long q = x[r] / echelon_[c][r];
        if (q != 0) {
            for (int i = 0; i < rows_; ++i) x[i] -= q * echelon_[c][i];
            for (std::size_t i = 0; i < transform_[c].size(); ++i)
                coef[i] += q * transform_[c][i];
        }
    }
    for (int i = 0; i < rows_; ++i)
        if (x[i] != 0) return std::nullopt;
    coef.resize(gens_.size());
    return coef;
}

} // namespace freecons
