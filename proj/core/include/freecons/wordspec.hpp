#ifndef FREECONS_WORDSPEC_HPP
#define FREECONS_WORDSPEC_HPP

#include "freecons/amalgam.hpp"
#include "freecons/hnn.hpp"

#include <string>

namespace freecons {

/// Tiny word grammar shared by the CLI:
///   word  := term*
///   term  := atom ('^' int)?
///   atom  := '(' word ')' | 't' | TAG ':' payload
/// Amalgam tags are G, H (factor elements) and A (an element of the
/// amalgamated subgroup, written in G's copy); the HNN tag is G plus the
/// stable letter t. Payloads: an index or element name (finite-table),
/// comma-separated integers (fg-abelian), or a letter string like "abA"
/// (free; uppercase = inverse). The empty word denotes the identity.
AmalgamWord parse_amalgam_word(const AmalgamGroup& g, const std::string& text);
HnnWord parse_hnn_word(const HnnGroup& g, const std::string& text);

} // namespace freecons

#endif
