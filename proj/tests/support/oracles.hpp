#ifndef FREECONS_TESTS_ORACLES_HPP
#define FREECONS_TESTS_ORACLES_HPP

#include <algorithm>
#include <random>
#include <vector>

namespace freecons::testing {

// Exhaustive d-th roots of x inside an explicit candidate set: every v with
// v^d = x, sorted by the group's canonical order.
template <typename Group, typename Word>
std::vector<Word> brute_roots(const Group& g, const std::vector<Word>& candidates,
                              const Word& x, long long d) {
    std::vector<Word> out;
    for (const auto& v : candidates)
        if (g.pow(v, d) == x) out.push_back(v);
    std::sort(out.begin(), out.end(),
              [&](const Word& a, const Word& b) { return g.less(a, b); });
    return out;
}

// Exhaustive conjugacy: some w in the witness set with w x w^-1 = y.
template <typename Group, typename Word>
bool brute_conjugate(const Group& g, const std::vector<Word>& witnesses,
                     const Word& x, const Word& y) {
    for (const auto& w : witnesses)
        if (g.mul(g.mul(w, x), g.inv(w)) == y) return true;
    return false;
}

// A deterministic random word over the given letter alphabet.
template <typename Group, typename Word, typename LetterAppend>
Word random_word(const Group& g, std::mt19937& rng, int max_len,
                 LetterAppend&& append_random_letter) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    Word w = g.identity_word();
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) w = append_random_letter(std::move(w));
    return w;
}

} // namespace freecons::testing

#endif
