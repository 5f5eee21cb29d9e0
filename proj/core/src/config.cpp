#include "freecons/config.hpp"

#include "freecons/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace freecons {

namespace {

using nlohmann::json;

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw ConfigError(std::string("missing config field: ") + name);
    return *it;
}

FactorGroupPtr parse_factor(const json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "finite-table") {
        auto table = field(j, "table").get<std::vector<std::vector<int>>>();
        std::vector<std::string> names;
        if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
        return FactorGroup::finite_table(table, std::move(names));
    }
    if (kind == "fg-abelian")
        return FactorGroup::fg_abelian(field(j, "moduli").get<AbelianVec>());
    if (kind == "free")
        return FactorGroup::free_group(field(j, "rank").get<int>());
    throw ConfigError("unknown factor kind: " + kind);
}

Elt parse_element(const FactorGroup& g, const json& j) {
    switch (g.kind()) {
    case GroupKind::FiniteTable:
        if (j.is_number_integer()) return g.table_element(j.get<int>());
        if (j.is_string()) {
            const auto& names = g.names();
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == j.get<std::string>())
                    return g.table_element(static_cast<int>(i));
            throw ConfigError("unknown element name: " + j.get<std::string>());
        }
        throw ConfigError("finite-table elements are indices or names");
    case GroupKind::FgAbelian:
        if (j.is_number_integer()) return g.abelian_element({j.get<long long>()});
        return g.abelian_element(j.get<AbelianVec>());
    case GroupKind::Free:
        return g.free_element(j.get<FreeWord>());
    }
    throw ConfigError("unsupported factor kind for element literal");
}

SubgroupOracle parse_subgroup(FactorGroupPtr g, const json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "trivial") return SubgroupOracle::trivial(std::move(g));
    if (kind == "enumerated") {
        std::vector<Elt> elems;
        for (const auto& e : field(j, "elements"))
            elems.push_back(parse_element(*g, e));
        return SubgroupOracle::enumerated(std::move(g), std::move(elems));
    }
    if (kind == "lattice")
        return SubgroupOracle::lattice(
            std::move(g), field(j, "generators").get<std::vector<AbelianVec>>());
    throw ConfigError("unknown subgroup kind: " + kind);
}

SubgroupMap parse_map(SubgroupOracle dom, SubgroupOracle cod, const json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "trivial") return SubgroupMap::trivial(std::move(dom), std::move(cod));
    if (kind == "elementwise") {
        std::vector<std::pair<Elt, Elt>> pairs;
        for (const auto& p : field(j, "pairs")) {
            if (!p.is_array() || p.size() != 2)
                throw ConfigError("identification pairs must be 2-element arrays");
            pairs.emplace_back(parse_element(dom.ambient(), p[0]),
                               parse_element(cod.ambient(), p[1]));
        }
        return SubgroupMap::elementwise(std::move(dom), std::move(cod),
                                        std::move(pairs));
    }
    if (kind == "matrix")
        return SubgroupMap::lattice_matrix(
            std::move(dom), std::move(cod),
            field(j, "matrix").get<std::vector<AbelianVec>>());
    throw ConfigError("unknown identification kind: " + kind);
}

} // namespace

GroupConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        GroupConfig cfg;
        cfg.digest = fnv1a_hex(text);
        cfg.id = j.contains("id") ? j["id"].get<std::string>() : "group";
        if (j.contains("window")) cfg.window = j["window"].get<int>();
        if (cfg.window <= 0) throw ConfigError("window must be positive");
        std::string construction = field(j, "construction").get<std::string>();
        const json& subs = field(j, "subgroups");
        if (construction == "amalgam") {
            const json& factors = field(j, "factors");
            if (!factors.is_array() || factors.size() != 2)
                throw ConfigError("an amalgam needs exactly two factors");
            auto G = parse_factor(factors[0]);
            auto H = parse_factor(factors[1]);
            auto a_g = parse_subgroup(G, field(subs, "a"));
            auto a_h = parse_subgroup(H, field(subs, "b"));
            auto ident = parse_map(a_g, a_h, field(j, "identification"));
            cfg.amalgam.emplace(G, H, std::move(a_g), std::move(a_h),
                                std::move(ident));
        } else if (construction == "hnn") {
            auto G = parse_factor(field(j, "base"));
            auto a = parse_subgroup(G, field(subs, "a"));
            auto b = parse_subgroup(G, field(subs, "b"));
            auto phi = parse_map(a, b, field(j, "identification"));
            cfg.hnn.emplace(G, std::move(a), std::move(b), std::move(phi));
        } else {
            throw ConfigError("unknown construction: " + construction);
        }
        return cfg;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config value: ") + e.what());
    }
}

GroupConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

} // namespace freecons
