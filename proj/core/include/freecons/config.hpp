#ifndef FREECONS_CONFIG_HPP
#define FREECONS_CONFIG_HPP

#include "freecons/amalgam.hpp"
#include "freecons/hnn.hpp"

#include <optional>
#include <string>

namespace freecons {

/// A fully constructed group instance loaded from a config file. Exactly
/// one of amalgam / hnn is set.
struct GroupConfig {
    std::string id;
    std::optional<AmalgamGroup> amalgam;
    std::optional<HnnGroup> hnn;
    int window = 4;
    std::string digest; // FNV-1a hash of the config text, for provenance
};

/// Parse a JSON group definition. Schema (documented in the README):
///   { "id": ..., "construction": "amalgam"|"hnn",
///     "factors": [F, F] | "base": F,
///     "subgroups": {"a": S, "b": S}, "identification": M, "window": int }
/// with F one of {"kind":"finite-table","table":[[...]],"names":[...]},
/// {"kind":"fg-abelian","moduli":[...]}, {"kind":"free","rank":r};
/// S one of {"kind":"trivial"}, {"kind":"enumerated","elements":[...]},
/// {"kind":"lattice","generators":[[...]]}; and M one of
/// {"kind":"trivial"}, {"kind":"elementwise","pairs":[[x,y],...]},
/// {"kind":"matrix","matrix":[[...]]}.
GroupConfig parse_config_text(const std::string& text);

/// Load and parse a config file. Throws ConfigError with a diagnostic.
GroupConfig load_config(const std::string& path);

} // namespace freecons

#endif
