#include "freecons/wordspec.hpp"

#include "freecons/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace freecons {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else if (c == '(' || c == ')' || c == '^') {
            flush();
            tokens.push_back(std::string(1, c));
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return tokens;
}

long long parse_int(const std::string& s) {
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0')
        throw ConfigError("expected an integer, got '" + s + "'");
    return v;
}

Elt parse_payload(const FactorGroup& g, const std::string& payload) {
    switch (g.kind()) {
    case GroupKind::FiniteTable: {
        const auto& names = g.names();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == payload) return g.table_element(static_cast<int>(i));
        return g.table_element(static_cast<int>(parse_int(payload)));
    }
    case GroupKind::FgAbelian: {
        AbelianVec v;
        std::size_t pos = 0;
        while (pos <= payload.size()) {
            std::size_t comma = payload.find(',', pos);
            std::string piece = payload.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            v.push_back(parse_int(piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return g.abelian_element(std::move(v));
    }
    case GroupKind::Free: {
        FreeWord w;
        for (char c : payload) {
            if (c >= 'a' && c <= 'z')
                w.push_back(c - 'a' + 1);
            else if (c >= 'A' && c <= 'Z')
                w.push_back(-(c - 'A' + 1));
            else
                throw ConfigError(std::string("bad free-group letter: ") + c);
        }
        return g.free_element(w);
    }
    }
    throw ConfigError("unsupported factor kind in word payload");
}

/// Generic recursive-descent evaluator over a word algebra.
template <class W, class Algebra>
class Parser {
public:
    Parser(std::vector<std::string> tokens, const Algebra& alg)
        : tokens_(std::move(tokens)), alg_(alg) {}

    W parse() {
        W w = word(0);
        if (pos_ != tokens_.size())
            throw ConfigError("unexpected token '" + tokens_[pos_] + "'");
        return w;
    }

private:
    W word(int depth) {
        W acc = alg_.identity();
        while (pos_ < tokens_.size() && tokens_[pos_] != ")") {
            W a = atom(depth);
            if (pos_ < tokens_.size() && tokens_[pos_] == "^") {
                ++pos_;
                if (pos_ >= tokens_.size())
                    throw ConfigError("dangling '^' in word");
                a = alg_.pow(a, parse_int(tokens_[pos_++]));
            }
            acc = alg_.mul(acc, a);
        }
        return acc;
    }

    W atom(int depth) {
        if (pos_ >= tokens_.size()) throw ConfigError("unexpected end of word");
        const std::string tok = tokens_[pos_++];
        if (tok == "(") {
            W w = word(depth + 1);
            if (pos_ >= tokens_.size() || tokens_[pos_] != ")")
                throw ConfigError("missing ')' in word");
            ++pos_;
            return w;
        }
        return alg_.letter(tok);
    }

    std::vector<std::string> tokens_;
    const Algebra& alg_;
    std::size_t pos_ = 0;
};

struct AmalgamAlgebra {
    const AmalgamGroup& g;
    AmalgamWord identity() const { return g.identity_word(); }
    AmalgamWord mul(const AmalgamWord& a, const AmalgamWord& b) const {
        return g.mul(a, b);
    }
    AmalgamWord pow(const AmalgamWord& a, long long k) const { return g.pow(a, k); }
    AmalgamWord letter(const std::string& tok) const {
        if (tok.size() < 3 || tok[1] != ':')
            throw ConfigError("expected G:, H:, or A: letter, got '" + tok + "'");
        std::string payload = tok.substr(2);
        switch (tok[0]) {
        case 'G':
            return g.factor_word(0, parse_payload(g.factor(0), payload));
        case 'H':
            return g.factor_word(1, parse_payload(g.factor(1), payload));
        case 'A': {
            Elt a = parse_payload(g.factor(0), payload);
            if (!g.subgroup(0).contains(a))
                throw ConfigError("A: letter is not in the amalgamated subgroup");
            return g.factor_word(0, a);
        }
        default:
            throw ConfigError("unknown letter tag '" + tok + "'");
        }
    }
};

struct HnnAlgebra {
    const HnnGroup& g;
    HnnWord identity() const { return g.identity_word(); }
    HnnWord mul(const HnnWord& a, const HnnWord& b) const { return g.mul(a, b); }
    HnnWord pow(const HnnWord& a, long long k) const { return g.pow(a, k); }
    HnnWord letter(const std::string& tok) const {
        if (tok == "t") return g.t_word(1);
        if (tok.size() < 3 || tok[1] != ':' || tok[0] != 'G')
            throw ConfigError("expected G: letter or t, got '" + tok + "'");
        return g.base_word(parse_payload(g.base(), tok.substr(2)));
    }
};

} // namespace

AmalgamWord parse_amalgam_word(const AmalgamGroup& g, const std::string& text) {
    AmalgamAlgebra alg{g};
    return Parser<AmalgamWord, AmalgamAlgebra>(tokenize(text), alg).parse();
}

HnnWord parse_hnn_word(const HnnGroup& g, const std::string& text) {
    HnnAlgebra alg{g};
    return Parser<HnnWord, HnnAlgebra>(tokenize(text), alg).parse();
}

} // namespace freecons
