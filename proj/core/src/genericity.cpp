#include "freecons/genericity.hpp"

#include "freecons/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <thread>

namespace freecons {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Deterministic parallel sweep: workers write into disjoint index slots,
/// so results are independent of scheduling.
template <class Fn>
void parallel_for(int workers, std::size_t count, Fn&& fn) {
    if (workers <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += nw) fn(i);
        });
    for (auto& t : pool) t.join();
}

template <class Group>
WitnessReport verify_impl(const Group& g, long long d, long long n,
                          const SweepOptions& opts) {
    if (d < 2) throw ConfigError("verification requires d >= 2");
    if (n < 0) throw ConfigError("ball radius must be >= 0");
    auto t0 = Clock::now();
    WitnessReport rep;
    rep.group_id = opts.group_id;
    rep.d = d;
    rep.n = n;
    bool exact = false;
    auto ball = g.ball(static_cast<int>(n), opts.window, opts.ball_cap, &exact);
    rep.exact = exact;
    rep.ball_size = ball.size();
    for (int esc = 0;; ++esc) {
        auto wa = g.witness_alpha(d, n, esc, opts.forced_exponents);
        rep.witness = g.format(wa.alpha);
        rep.alpha_exp = wa.alpha_exp;
        rep.beta_exp = wa.beta_exp;
        rep.escalations = esc;
        rep.verdicts.assign(ball.size(), Verdict{});
        parallel_for(opts.workers, ball.size(), [&](std::size_t i) {
            auto xa = g.mul(ball[i], wa.alpha);
            rep.verdicts[i].element = g.format(ball[i]);
            rep.verdicts[i].hyperbolic = !g.is_elliptic(xa);
            rep.verdicts[i].root_free =
                !g.is_dth_power(xa, d, opts.search_bound);
        });
        rep.pass = std::all_of(rep.verdicts.begin(), rep.verdicts.end(),
                               [](const Verdict& v) {
                                   return v.hyperbolic && v.root_free;
                               });
        if (rep.pass || opts.forced_exponents || esc >= opts.escalation_cap)
            break;
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

template <class Group>
CensusReport census_impl(const Group& g, long long d, int radius,
                         const SweepOptions& opts) {
    if (d < 2) throw ConfigError("census requires d >= 2");
    if (radius < 0) throw ConfigError("ball radius must be >= 0");
    auto t0 = Clock::now();
    CensusReport rep;
    rep.group_id = opts.group_id;
    rep.d = d;
    rep.radius = radius;
    bool exact = false;
    auto ball = g.ball(radius, opts.window, opts.ball_cap, &exact);
    rep.exact = exact;
    rep.ball_size = ball.size();
    struct Slot {
        bool counted = false;
        CensusEntry entry;
    };
    std::vector<Slot> slots(ball.size());
    parallel_for(opts.workers, ball.size(), [&](std::size_t i) {
        const auto& x = ball[i];
        if (g.is_elliptic(x)) return;
        if (g.is_dth_power(x, d, opts.search_bound)) return;
        auto roots = g.dth_roots(g.pow(x, d), d, opts.search_bound);
        slots[i].counted = true;
        slots[i].entry = CensusEntry{g.format(x), roots.size()};
    });
    std::map<std::size_t, std::size_t> hist;
    for (auto& s : slots) {
        if (!s.counted) continue;
        rep.s_observed = std::max(rep.s_observed, s.entry.root_count);
        ++hist[s.entry.root_count];
        rep.entries.push_back(std::move(s.entry));
    }
    rep.histogram.assign(hist.begin(), hist.end());
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

nlohmann::ordered_json verdicts_json(const std::vector<Verdict>& vs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : vs)
        arr.push_back({{"element", v.element},
                       {"hyperbolic", v.hyperbolic},
                       {"root_free", v.root_free}});
    return arr;
}

} // namespace

WitnessReport verify_witness(const AmalgamGroup& g, long long d, long long n,
                            const SweepOptions& opts) {
    return verify_impl(g, d, n, opts);
}

WitnessReport verify_witness(const HnnGroup& g, long long d, long long n,
                            const SweepOptions& opts) {
    return verify_impl(g, d, n, opts);
}

CensusReport fs_type_census(const AmalgamGroup& g, long long d, int radius,
                            const SweepOptions& opts) {
    return census_impl(g, d, radius, opts);
}

CensusReport fs_type_census(const HnnGroup& g, long long d, int radius,
                            const SweepOptions& opts) {
    return census_impl(g, d, radius, opts);
}

GenerosityResult generosity_escapee(const AmalgamGroup& g, int m, int N,
                                    const SweepOptions& opts) {
    if (m < 0 || N < 0) throw ConfigError("radii must be >= 0");
    auto t0 = Clock::now();
    GenerosityResult res;
    res.group_id = opts.group_id;
    res.m = m;
    res.N = N;
    bool exact_n = false, exact_m = false;
    auto ball_n = g.ball(N, opts.window, opts.ball_cap, &exact_n);
    auto ball_m = g.ball(m, opts.window, opts.ball_cap, &exact_m);
    res.exact = exact_n && exact_m;
    res.scanned = ball_n.size();
    std::vector<AmalgamWord> translates;
    translates.reserve(ball_m.size());
    for (const auto& w : ball_m) translates.push_back(g.inv(w));
    std::vector<char> escapes(ball_n.size(), 0);
    parallel_for(opts.workers, ball_n.size(), [&](std::size_t i) {
        for (const auto& gi : translates)
            if (g.is_elliptic(g.mul(gi, ball_n[i]))) return;
        escapes[i] = 1;
    });
    for (std::size_t i = 0; i < escapes.size(); ++i) {
        if (escapes[i]) {
            res.found = true;
            res.escapee = g.format(ball_n[i]);
            res.elapsed_ms = ms_since(t0);
            return res;
        }
    }
    // Fall back to the witness construction: its output escapes every
    // B_m-translate of the elliptic set but lies outside the N-ball.
    try {
        for (int esc = 0; esc <= opts.escalation_cap; ++esc) {
            auto wa = g.witness_alpha(2, m, esc, opts.forced_exponents);
            bool ok = true;
            for (const auto& u : ball_m)
                if (g.is_elliptic(g.mul(u, wa.alpha))) {
                    ok = false;
                    break;
                }
            if (ok) {
                res.found = true;
                res.via_witness = true;
                res.escapee = g.format(wa.alpha);
                break;
            }
            if (opts.forced_exponents) break;
        }
    } catch (const DegenerateError&) {
        // degenerate amalgam: translates of the elliptic set cover the group
    }
    res.elapsed_ms = ms_since(t0);
    return res;
}

std::string render_report(const WitnessReport& r, bool include_timing) {
    nlohmann::ordered_json j;
    j["group_id"] = r.group_id;
    j["d"] = r.d;
    j["n"] = r.n;
    j["witness"] = r.witness;
    j["exponents"] = {{"alpha", r.alpha_exp}, {"beta", r.beta_exp}};
    j["ball_size"] = r.ball_size;
    j["verdicts"] = verdicts_json(r.verdicts);
    j["escalations"] = r.escalations;
    j["exact"] = r.exact;
    j["pass"] = r.pass;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2);
}

std::string render_report(const CensusReport& r, bool include_timing) {
    nlohmann::ordered_json j;
    j["group_id"] = r.group_id;
    j["d"] = r.d;
    j["radius"] = r.radius;
    j["ball_size"] = r.ball_size;
    j["s_observed"] = r.s_observed;
    nlohmann::ordered_json hist = nlohmann::ordered_json::array();
    for (const auto& [count, mult] : r.histogram)
        hist.push_back({{"roots", count}, {"elements", mult}});
    j["histogram"] = hist;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"element", e.element}, {"roots", e.root_count}});
    j["entries"] = entries;
    j["exact"] = r.exact;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2);
}

std::string render_report(const GenerosityResult& r, bool include_timing) {
    nlohmann::ordered_json j;
    j["group_id"] = r.group_id;
    j["m"] = r.m;
    j["N"] = r.N;
    j["found"] = r.found;
    j["via_witness"] = r.via_witness;
    j["escapee"] = r.escapee;
    j["scanned"] = r.scanned;
    j["exact"] = r.exact;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2);
}

} // namespace freecons
