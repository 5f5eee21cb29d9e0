#ifndef FREECONS_GENERICITY_HPP
#define FREECONS_GENERICITY_HPP

#include "freecons/amalgam.hpp"
#include "freecons/hnn.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freecons {

struct SweepOptions {
    int workers = 1;
    int window = 4;       // letter window for infinite factors
    int search_bound = 6; // subgroup sample window in root/twist searches
    std::size_t ball_cap = 2'000'000;
    int escalation_cap = 6;
    std::optional<std::pair<long long, long long>> forced_exponents;
    std::string group_id = "group";
};

struct Verdict {
    std::string element;
    bool hyperbolic = false;
    bool root_free = false;
};

/// Outcome of one witness sweep: witness, exponents, and a verdict
/// for every ball element (x*alpha hyperbolic? free of d-th roots?).
struct WitnessReport {
    std::string group_id;
    long long d = 0;
    long long n = 0;
    std::string witness;
    long long alpha_exp = 0;
    long long beta_exp = 0;
    std::size_t ball_size = 0;
    std::vector<Verdict> verdicts;
    int escalations = 0;
    bool exact = false;
    bool pass = false;
    double elapsed_ms = 0.0;
};

struct CensusEntry {
    std::string element;
    std::size_t root_count = 0;
};

/// Root census: for each hyperbolic non-d-th-power x in the ball, the
/// number of d-th roots of x^d. s_observed is the maximum.
struct CensusReport {
    std::string group_id;
    long long d = 0;
    int radius = 0;
    std::size_t ball_size = 0;
    std::size_t s_observed = 0;
    std::vector<std::pair<std::size_t, std::size_t>> histogram; // (count, multiplicity)
    std::vector<CensusEntry> entries;
    bool exact = false;
    double elapsed_ms = 0.0;
};

struct GenerosityResult {
    std::string group_id;
    int m = 0;
    int N = 0;
    bool found = false;
    bool via_witness = false; // escapee built by the witness construction,
                              // certified against B_m but outside the N-ball
    std::string escapee;
    std::size_t scanned = 0;
    bool exact = false;
    double elapsed_ms = 0.0;
};

WitnessReport verify_witness(const AmalgamGroup& g, long long d, long long n,
                            const SweepOptions& opts = {});
WitnessReport verify_witness(const HnnGroup& g, long long d, long long n,
                            const SweepOptions& opts = {});

CensusReport fs_type_census(const AmalgamGroup& g, long long d, int radius,
                            const SweepOptions& opts = {});
CensusReport fs_type_census(const HnnGroup& g, long long d, int radius,
                            const SweepOptions& opts = {});

/// An element of the (windowed) N-ball outside every m-ball translate of
/// the elliptic set, scanning the ball first and falling back to the
/// witness construction (whose output may lie outside the N-ball).
GenerosityResult generosity_escapee(const AmalgamGroup& g, int m, int N,
                                    const SweepOptions& opts = {});

/// Canonical structured-text rendering; elapsed_ms is only emitted when
/// include_timing is set, so canonical renders are byte-reproducible.
std::string render_report(const WitnessReport& r, bool include_timing = false);
std::string render_report(const CensusReport& r, bool include_timing = false);
std::string render_report(const GenerosityResult& r, bool include_timing = false);

} // namespace freecons

#endif
