#include "freecons/factor_group.hpp"

#include "freecons/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>

namespace freecons {

namespace {

std::atomic<unsigned> g_next_gid{1};

long long mod_reduce(long long x, long long m) {
    if (m <= 0) return x;
    long long r = x % m;
    if (r < 0) r += m;
    return r;
}

// (1-norm, then per-coordinate magnitude with nonnegative before negative).
// Small elements come first, and +k precedes -k.
bool abelian_less(const AbelianVec& a, const AbelianVec& b) {
    long long na = 0, nb = 0;
    for (auto x : a) na += std::llabs(x);
    for (auto x : b) nb += std::llabs(x);
    if (na != nb) return na < nb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        long long ma = std::llabs(a[i]), mb = std::llabs(b[i]);
        if (ma != mb) return ma < mb;
        int sa = a[i] < 0 ? 1 : 0, sb = b[i] < 0 ? 1 : 0;
        if (sa != sb) return sa < sb;
    }
    return false;
}

// Letter order: a < a^-1 < b < b^-1 < ...
bool free_letter_less(int a, int b) {
    int ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return a > 0 && b < 0;
}

bool free_less(const FreeWord& a, const FreeWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return free_letter_less(a[i], b[i]);
    }
    return false;
}

} // namespace

FactorGroupPtr FactorGroup::finite_table(const std::vector<std::vector<int>>& table,
                                         std::vector<std::string> names) {
    auto g = std::shared_ptr<FactorGroup>(new FactorGroup());
    g->kind_ = GroupKind::FiniteTable;
    g->gid_ = g_next_gid.fetch_add(1);
    int n = static_cast<int>(table.size());
    if (n < 1 || n > kMaxTableOrder)
        throw ConfigError("finite-table order out of range [1, 1024]");
    g->order_ = n;
    g->table_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw ConfigError("multiplication table is not square");
        for (int j = 0; j < n; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= n)
                throw ConfigError("multiplication table entry out of range");
            g->table_[static_cast<std::size_t>(i) * n + j] = v;
        }
    }
    auto at = [&](int i, int j) { return g->table_[static_cast<std::size_t>(i) * n + j]; };

    int e = -1;
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j)
            if (at(i, j) != j || at(j, i) != j) { ok = false; break; }
        if (ok) { e = i; break; }
    }
    if (e < 0) throw ConfigError("multiplication table has no identity");
    g->identity_index_ = e;

    g->inverse_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (at(i, j) == e && at(j, i) == e) { g->inverse_[i] = j; break; }
        if (g->inverse_[i] < 0) throw ConfigError("table element has no inverse");
    }

    if (n <= kExhaustiveAssocOrder) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (at(at(a, b), c) != at(a, at(b, c)))
                        throw ConfigError("multiplication table is not associative");
    } else {
        std::mt19937 rng(0xfcbdu);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int k = 0; k < 4096; ++k) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (at(at(a, b), c) != at(a, at(b, c)))
                throw ConfigError("multiplication table is not associative");
        }
    }

    if (!names.empty() && static_cast<int>(names.size()) != n)
        throw ConfigError("names list does not match group order");
    g->names_ = std::move(names);
    return g;
}

FactorGroupPtr FactorGroup::fg_abelian(AbelianVec moduli) {
    auto g = std::shared_ptr<FactorGroup>(new FactorGroup());
    g->kind_ = GroupKind::FgAbelian;
    g->gid_ = g_next_gid.fetch_add(1);
    if (moduli.empty() || static_cast<int>(moduli.size()) > kMaxAbelianRank)
        throw ConfigError("fg-abelian rank out of range [1, 8]");
    for (auto m : moduli)
        if (m < 0) throw ConfigError("fg-abelian modulus must be >= 0");
    g->moduli_ = std::move(moduli);
    return g;
}

FactorGroupPtr FactorGroup::free_group(int rank) {
    auto g = std::shared_ptr<FactorGroup>(new FactorGroup());
    g->kind_ = GroupKind::Free;
    g->gid_ = g_next_gid.fetch_add(1);
    if (rank < 1 || rank > 26) throw ConfigError("free rank out of range [1, 26]");
    g->rank_ = rank;
    return g;
}

bool FactorGroup::finite() const {
    switch (kind_) {
    case GroupKind::FiniteTable: return true;
    case GroupKind::FgAbelian:
        return std::all_of(moduli_.begin(), moduli_.end(), [](long long m) { return m > 0; });
    case GroupKind::Free: return false;
    }
    return false;
}

std::size_t FactorGroup::order() const {
    if (!finite()) throw UnsupportedError("order() of an infinite group");
    if (kind_ == GroupKind::FiniteTable) return static_cast<std::size_t>(order_);
    std::size_t n = 1;
    for (auto m : moduli_) n *= static_cast<std::size_t>(m);
    return n;
}

Elt FactorGroup::identity() const {
    switch (kind_) {
    case GroupKind::FiniteTable: return Elt{gid_, identity_index_};
    case GroupKind::FgAbelian: return Elt{gid_, AbelianVec(moduli_.size(), 0)};
    case GroupKind::Free: return Elt{gid_, FreeWord{}};
    }
    return {};
}

bool FactorGroup::is_identity(const Elt& x) const {
    return x == identity();
}

void FactorGroup::check_owned(const Elt& x) const {
    if (x.gid != gid_)
        throw ConfigError("element does not belong to this group");
}

Elt FactorGroup::table_element(int index) const {
    if (kind_ != GroupKind::FiniteTable)
        throw ConfigError("table_element on a non-table group");
    if (index < 0 || index >= order_)
        throw ConfigError("table element index out of range");
    return Elt{gid_, index};
}

Elt FactorGroup::abelian_element(AbelianVec coords) const {
    if (kind_ != GroupKind::FgAbelian)
        throw ConfigError("abelian_element on a non-abelian group");
    if (coords.size() != moduli_.size())
        throw ConfigError("abelian element has wrong rank");
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = mod_reduce(coords[i], moduli_[i]);
    return Elt{gid_, std::move(coords)};
}

Elt FactorGroup::free_element(const FreeWord& letters) const {
    if (kind_ != GroupKind::Free)
        throw ConfigError("free_element on a non-free group");
    FreeWord out;
    for (int l : letters) {
        if (l == 0 || std::abs(l) > rank_)
            throw ConfigError("free letter out of range");
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return Elt{gid_, std::move(out)};
}

Elt FactorGroup::mul(const Elt& x, const Elt& y) const {
    check_owned(x);
    check_owned(y);
    switch (kind_) {
    case GroupKind::FiniteTable: {
        int a = std::get<TableIndex>(x.v), b = std::get<TableIndex>(y.v);
        return Elt{gid_, table_[static_cast<std::size_t>(a) * order_ + b]};
    }
    case GroupKind::FgAbelian: {
        const auto& a = std::get<AbelianVec>(x.v);
        const auto& b = std::get<AbelianVec>(y.v);
        AbelianVec out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            out[i] = mod_reduce(a[i] + b[i], moduli_[i]);
        return Elt{gid_, std::move(out)};
    }
    case GroupKind::Free: {
        FreeWord out = std::get<FreeWord>(x.v);
        for (int l : std::get<FreeWord>(y.v)) {
            if (!out.empty() && out.back() == -l) out.pop_back();
            else out.push_back(l);
        }
        return Elt{gid_, std::move(out)};
    }
    }
    return {};
}

Elt FactorGroup::inv(const Elt& x) const {
    check_owned(x);
    switch (kind_) {
    case GroupKind::FiniteTable:
        return Elt{gid_, inverse_[std::get<TableIndex>(x.v)]};
    case GroupKind::FgAbelian: {
        const auto& a = std::get<AbelianVec>(x.v);
        AbelianVec out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            out[i] = mod_reduce(-a[i], moduli_[i]);
        return Elt{gid_, std::move(out)};
    }
    case GroupKind::Free: {
        const auto& w = std::get<FreeWord>(x.v);
        FreeWord out(w.rbegin(), w.rend());
        for (int& l : out) l = -l;
        return Elt{gid_, std::move(out)};
    }
    }
    return {};
}

bool FactorGroup::less(const Elt& x, const Elt& y) const {
    check_owned(x);
    check_owned(y);
    switch (kind_) {
    case GroupKind::FiniteTable:
        return std::get<TableIndex>(x.v) < std::get<TableIndex>(y.v);
    case GroupKind::FgAbelian:
        return abelian_less(std::get<AbelianVec>(x.v), std::get<AbelianVec>(y.v));
    case GroupKind::Free:
        return free_less(std::get<FreeWord>(x.v), std::get<FreeWord>(y.v));
    }
    return false;
}

std::vector<Elt> FactorGroup::enumerate(int window) const {
    std::vector<Elt> out;
    switch (kind_) {
    case GroupKind::FiniteTable:
        out.reserve(order_);
        for (int i = 0; i < order_; ++i) out.push_back(Elt{gid_, i});
        break;
    case GroupKind::FgAbelian: {
        std::vector<AbelianVec> acc{AbelianVec{}};
        for (auto m : moduli_) {
            std::vector<AbelianVec> next;
            long long lo = (m > 0) ? 0 : -window;
            long long hi = (m > 0) ? m - 1 : window;
            for (const auto& p : acc)
                for (long long c = lo; c <= hi; ++c) {
                    auto q = p;
                    q.push_back(c);
                    next.push_back(std::move(q));
                }
            acc = std::move(next);
        }
        for (auto& v : acc) out.push_back(Elt{gid_, std::move(v)});
        break;
    }
    case GroupKind::Free: {
        std::vector<FreeWord> frontier{FreeWord{}};
        out.push_back(identity());
        for (int len = 1; len <= window; ++len) {
            std::vector<FreeWord> next;
            for (const auto& w : frontier)
                for (int l = 1; l <= rank_; ++l)
                    for (int s : {l, -l}) {
                        if (!w.empty() && w.back() == -s) continue;
                        auto q = w;
                        q.push_back(s);
                        next.push_back(std::move(q));
                    }
            for (const auto& w : next) out.push_back(Elt{gid_, w});
            frontier = std::move(next);
        }
        break;
    }
    }
    std::sort(out.begin(), out.end(),
              [this](const Elt& a, const Elt& b) { return less(a, b); });
    return out;
}

std::string FactorGroup::format(const Elt& x) const {
    check_owned(x);
    switch (kind_) {
    case GroupKind::FiniteTable: {
        int i = std::get<TableIndex>(x.v);
        if (!names_.empty()) return names_[i];
        return "#" + std::to_string(i);
    }
    case GroupKind::FgAbelian: {
        const auto& v = std::get<AbelianVec>(x.v);
        if (v.size() == 1) return std::to_string(v[0]);
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << v[i];
        os << ")";
        return os.str();
    }
    case GroupKind::Free: {
        const auto& w = std::get<FreeWord>(x.v);
        if (w.empty()) return "1";
        std::string s;
        for (int l : w) {
            char c = static_cast<char>('a' + std::abs(l) - 1);
            if (l < 0) c = static_cast<char>(c - 'a' + 'A');
            s.push_back(c);
        }
        return s;
    }
    }
    return {};
}

Elt pow_elt(const FactorGroup& g, const Elt& x, long long d) {
    if (d < 0) return pow_elt(g, g.inv(x), -d);
    Elt acc = g.identity();
    Elt base = x;
    while (d > 0) {
        if (d & 1) acc = g.mul(acc, base);
        d >>= 1;
        if (d > 0) base = g.mul(base, base);
    }
    return acc;
}

std::vector<Elt> dth_roots_in_factor(const FactorGroup& g, const Elt& x, long long d) {
    std::vector<Elt> out;
    if (d == 1) return {x};
    switch (g.kind()) {
    case GroupKind::FiniteTable:
        for (const auto& e : g.enumerate(0))
            if (pow_elt(g, e, d) == x) out.push_back(e);
        break;
    case GroupKind::FgAbelian: {
        const auto& m = g.moduli();
        const auto& v = std::get<AbelianVec>(x.v);
        std::vector<std::vector<long long>> per(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (m[i] > 0) {
                for (long long t = 0; t < m[i]; ++t)
                    if (mod_reduce(d * t, m[i]) == v[i]) per[i].push_back(t);
            } else if (v[i] % d == 0) {
                per[i].push_back(v[i] / d);
            }
            if (per[i].empty()) return {};
        }
        std::vector<AbelianVec> acc{AbelianVec{}};
        for (const auto& choices : per) {
            std::vector<AbelianVec> next;
            for (const auto& p : acc)
                for (long long t : choices) {
                    AbelianVec q = p;
                    q.push_back(t);
                    next.push_back(std::move(q));
                }
            acc = std::move(next);
        }
        for (auto& q : acc) out.push_back(g.abelian_element(std::move(q)));
        break;
    }
    case GroupKind::Free: {
        if (g.is_identity(x)) return {x};
        // x = c z c^-1 with z cyclically reduced; any root has the form
        // c y c^-1 with y^d = z, and y must be the leading |z|/d letters.
        FreeWord w = std::get<FreeWord>(x.v);
        FreeWord c;
        while (w.size() >= 2 && w.front() == -w.back()) {
            c.push_back(w.front());
            w.erase(w.begin());
            w.pop_back();
        }
        if (w.size() % d != 0) return {};
        FreeWord y(w.begin(), w.begin() + static_cast<long>(w.size() / d));
        Elt cand = g.free_element(y);
        Elt conj = g.free_element(c);
        cand = g.mul(g.mul(conj, cand), g.inv(conj));
        if (pow_elt(g, cand, d) == x) out.push_back(cand);
        break;
    }
    }
    std::sort(out.begin(), out.end(),
              [&](const Elt& a, const Elt& b) { return g.less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::pair<Elt, Elt> conjugacy_canonical(const FactorGroup& g, const Elt& x) {
    switch (g.kind()) {
    case GroupKind::FiniteTable: {
        Elt best = x;
        Elt by = g.identity();
        for (const auto& u : g.enumerate(0)) {
            Elt m = g.mul(g.mul(u, x), g.inv(u));
            if (g.less(m, best)) {
                best = m;
                by = u;
            }
        }
        // best = by x by^-1, so x = by^-1 best by.
        return {best, g.inv(by)};
    }
    case GroupKind::FgAbelian:
        return {x, g.identity()};
    case GroupKind::Free: {
        FreeWord w = std::get<FreeWord>(x.v);
        FreeWord c;
        while (w.size() >= 2 && w.front() == -w.back()) {
            c.push_back(w.front());
            w.erase(w.begin());
            w.pop_back();
        }
        // Minimal rotation of the cyclically reduced part.
        std::size_t best_j = 0;
        FreeWord best = w;
        for (std::size_t j = 1; j < w.size(); ++j) {
            FreeWord rot(w.begin() + static_cast<long>(j), w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(j));
            if (free_less(rot, best)) {
                best = rot;
                best_j = j;
            }
        }
        // w = w1 * best * w1^-1 with w1 the first best_j letters.
        FreeWord u = c;
        u.insert(u.end(), w.begin(), w.begin() + static_cast<long>(best_j));
        return {g.free_element(best), g.free_element(u)};
    }
    }
    return {x, g.identity()};
}

int compare_elts(const FactorGroup& g, const Elt& x, const Elt& y) {
    if (x == y) return 0;
    return g.less(x, y) ? -1 : 1;
}

} // namespace freecons
