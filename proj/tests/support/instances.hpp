#ifndef FREECONS_TESTS_INSTANCES_HPP
#define FREECONS_TESTS_INSTANCES_HPP

#include "freecons/amalgam.hpp"
#include "freecons/hnn.hpp"

#include <vector>

namespace freecons::testing {

// S3 with elements ordered e, (01), (02), (12), (012), (021); composition
// (p*q)(i) = p(q(i)).
inline std::vector<std::vector<int>> s3_table() {
    return {{0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 4, 0, 5, 1, 3},
            {3, 5, 4, 0, 2, 1}, {4, 2, 3, 1, 5, 0}, {5, 3, 1, 2, 0, 4}};
}

inline std::vector<std::string> s3_names() {
    return {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
}

inline FactorGroupPtr make_s3() {
    return FactorGroup::finite_table(s3_table(), s3_names());
}

// Z/2 * Z/3 (trivial amalgamated subgroup).
inline AmalgamGroup make_z2z3() {
    auto g = FactorGroup::fg_abelian({2});
    auto h = FactorGroup::fg_abelian({3});
    return AmalgamGroup(g, h, SubgroupOracle::trivial(g),
                        SubgroupOracle::trivial(h),
                        SubgroupMap::trivial(SubgroupOracle::trivial(g),
                                             SubgroupOracle::trivial(h)));
}

// Z/2 * Z/2, the infinite dihedral group.
inline AmalgamGroup make_dihedral() {
    auto g = FactorGroup::fg_abelian({2});
    auto h = FactorGroup::fg_abelian({2});
    return AmalgamGroup(g, h, SubgroupOracle::trivial(g),
                        SubgroupOracle::trivial(h),
                        SubgroupMap::trivial(SubgroupOracle::trivial(g),
                                             SubgroupOracle::trivial(h)));
}

// S3 *_{C2} S3 with the amalgamated C2 generated by (12) on both sides.
inline AmalgamGroup make_s3_amalgam() {
    auto g = make_s3();
    auto h = make_s3();
    auto c2_g = SubgroupOracle::enumerated(
        g, {g->table_element(0), g->table_element(3)});
    auto c2_h = SubgroupOracle::enumerated(
        h, {h->table_element(0), h->table_element(3)});
    auto ident = SubgroupMap::elementwise(
        c2_g, c2_h,
        {{g->table_element(0), h->table_element(0)},
         {g->table_element(3), h->table_element(3)}});
    return AmalgamGroup(g, h, c2_g, c2_h, std::move(ident));
}

// (Z x (Z/2)^k) *_A ((Z/2)^k x Z) with A = (Z/2)^k central in both factors.
inline AmalgamGroup make_central(int k) {
    AbelianVec mg(1 + k, 2), mh(1 + k, 2);
    mg[0] = 0;
    mh[k] = 0;
    auto g = FactorGroup::fg_abelian(mg);
    auto h = FactorGroup::fg_abelian(mh);
    std::vector<AbelianVec> gens_g, gens_h;
    for (int i = 0; i < k; ++i) {
        AbelianVec vg(1 + k, 0), vh(1 + k, 0);
        vg[1 + i] = 1;
        vh[i] = 1;
        gens_g.push_back(vg);
        gens_h.push_back(vh);
    }
    auto a_g = SubgroupOracle::lattice(g, gens_g);
    auto a_h = SubgroupOracle::lattice(h, gens_h);
    std::vector<AbelianVec> eye(k, AbelianVec(k, 0));
    for (int i = 0; i < k; ++i) eye[i][i] = 1;
    auto ident = SubgroupMap::lattice_matrix(a_g, a_h, eye);
    return AmalgamGroup(g, h, a_g, a_h, std::move(ident));
}

// BS(2,3) = <a, t | t^-1 a^2 t = a^3> as an HNN extension of Z.
inline HnnGroup make_bs23() {
    auto z = FactorGroup::fg_abelian({0});
    auto a = SubgroupOracle::lattice(z, {{2}});
    auto b = SubgroupOracle::lattice(z, {{3}});
    auto phi = SubgroupMap::lattice_matrix(a, b, {{1}});
    return HnnGroup(z, a, b, std::move(phi));
}

// F2 * F2 over the trivial subgroup, for free-factor coverage.
inline AmalgamGroup make_f2_f2() {
    auto g = FactorGroup::free_group(2);
    auto h = FactorGroup::free_group(2);
    return AmalgamGroup(g, h, SubgroupOracle::trivial(g),
                        SubgroupOracle::trivial(h),
                        SubgroupMap::trivial(SubgroupOracle::trivial(g),
                                             SubgroupOracle::trivial(h)));
}

} // namespace freecons::testing

#endif
