#include <doctest.h>

#include <map>

#include "toricsheaf/fan.hpp"

using namespace toricsheaf;

TEST_CASE("validate: textbook and broken fans")
{
    const auto p2 = validate(projective_space(2));
    CHECK(p2.smooth);
    CHECK(p2.complete);

    const Fan one_cone(2, {{1, 0}, {0, 1}}, {Cone({0, 1})});
    const auto oc = validate(one_cone);
    CHECK(oc.smooth);
    CHECK_FALSE(oc.complete);

    const Fan index_two(2, {{1, 0}, {1, 2}}, {Cone({0, 1})});
    CHECK_FALSE(validate(index_two).smooth);

    // Five 144-degree cones winding twice around the origin.
    const Fan pentagram(2, {{1, 0}, {1, 3}, {-4, 3}, {-4, -3}, {1, -3}},
                        {Cone({0, 2}), Cone({2, 4}), Cone({4, 1}), Cone({1, 3}), Cone({3, 0})});
    CHECK_FALSE(validate(pentagram).complete);

    // Two cones overlapping rather than meeting along the shared wall.
    const Fan folded(2, {{1, 0}, {0, 1}, {1, 1}}, {Cone({0, 1}), Cone({1, 2})});
    CHECK_FALSE(validate(folded).complete);
}

TEST_CASE("structural errors")
{
    CHECK_THROWS_AS(Fan(2, {{2, 0}, {0, 1}}, {Cone({0, 1})}), FanError);
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {1, 0}}, {Cone({0})}), FanError);
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {-1, 0}}, {Cone({0, 1})}), FanError);
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}}, {Cone({0, 2})}), FanError);
    CHECK_THROWS_AS(Fan(2, {{1, 0, 0}}, {Cone({0})}), FanError);
    CHECK_THROWS_AS(Cone({1, 1}), FanError);
}

TEST_CASE("standard constructors")
{
    const Fan p1 = projective_space(1);
    CHECK(p1.num_rays() == 2);
    CHECK(p1.max_cones().size() == 2);

    const Fan p1p1 = product(p1, p1);
    CHECK(p1p1.num_rays() == 4);
    CHECK(p1p1.max_cones().size() == 4);
    CHECK(p1p1.rays() == std::vector<LatticeVector>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});

    const auto f1 = validate(hirzebruch(1));
    CHECK(f1.smooth);
    CHECK(f1.complete);
    CHECK(hirzebruch(1).num_rays() == 4);

    for (std::size_t n = 1; n <= 5; ++n) {
        const Fan pn = projective_space(n);
        CHECK(pn.num_rays() == n + 1);
        const auto v = validate(pn);
        CHECK(v.smooth);
        CHECK(v.complete);
    }
    for (std::int64_t a = 0; a <= 4; ++a) {
        const auto v = validate(hirzebruch(a));
        CHECK(v.smooth);
        CHECK(v.complete);
    }
    const auto p2p1 = validate(product(projective_space(2), projective_space(1)));
    CHECK(p2p1.smooth);
    CHECK(p2p1.complete);
    CHECK_THROWS(projective_space(0));
    CHECK_THROWS(hirzebruch(-1));
}

TEST_CASE("cones and orbits")
{
    const Fan p2 = projective_space(2);
    CHECK(p2.cones_of_dim(1).size() == 3);
    CHECK(p2.cones_of_dim(0) == std::vector<Cone>{Cone()});
    CHECK_THROWS_AS(p2.cones_of_dim(3), std::out_of_range);

    const Fan p3 = projective_space(3);
    CHECK(p3.orbit_dim(p3.cones_of_dim(3).front()) == 0);
    CHECK(p3.orbit_dim(Cone()) == 3);
    CHECK(p3.cones_of_dim(2).size() == 6);
    CHECK_THROWS(p2.orbit_dim(Cone({0, 1, 2})));
}

TEST_CASE("property: face poset closed under intersection, walls two-sided")
{
    const std::vector<Fan> fans{projective_space(2), projective_space(3), projective_space(4),
                                product(projective_space(1), projective_space(1)), hirzebruch(1),
                                hirzebruch(3), product(projective_space(2), projective_space(1)),
                                product(product(projective_space(1), projective_space(1)),
                                        projective_space(1))};
    for (const auto& fan : fans) {
        const auto cones = fan.all_cones();
        for (const auto& a : cones) {
            for (const auto& b : cones) {
                std::vector<std::size_t> common;
                std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                                      std::back_inserter(common));
                CHECK(fan.has_cone(Cone(common)));
            }
        }
        std::map<Cone, int> owners;
        for (const auto& sigma : fan.max_cones()) {
            for (const auto& wall : fan.cones_of_dim(fan.dim() - 1)) {
                owners[wall] += wall.is_face_of(sigma);
            }
        }
        for (const auto& [wall, count] : owners) {
            CHECK(count == 2);
        }
    }
}
