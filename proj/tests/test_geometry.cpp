#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plethygen/errors.hpp"
#include "plethygen/geometry.hpp"
#include "plethygen/qehr.hpp"
#include "plethygen/rational.hpp"

using namespace plethygen;

TEST_CASE("face points are strictly increasing across blocks") {
    // gamma = ({2},{1,3}) in w=3: v_2 < v_1 = v_3.
    LatticePointSet pts = face_points({{2}, {1, 3}}, 2);
    CHECK(pts.points == std::vector<std::vector<int>>{{1, 0, 1}, {2, 0, 2}, {2, 1, 2}});
    CHECK(ipe(pts) == monomial_qsym({1, 2}, 2));
}

TEST_CASE("chamber points respect descent strictness") {
    // pi = (2,1): position descent at 1, so v_2 < v_1.
    LatticePointSet pts = chamber_points({2, 1}, 1);
    CHECK(pts.points == std::vector<std::vector<int>>{{1, 0}});
    // pi = (1,2): v_1 <= v_2.
    CHECK(chamber_points({1, 2}, 1).points ==
          std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}});
    CHECK(ipe(chamber_points({1, 2}, 2)) == fundamental_qsym({2}, 2));
}

TEST_CASE("chambers partition the cube") {
    int w = 3, h = 3;
    std::size_t total = 0;
    for (const auto& pi : permutations_of(w)) {
        auto pts = chamber_points(pi, h);
        total += pts.points.size();
        for (const auto& v : pts.points) CHECK(chamber_of_point(v) == pi);
    }
    CHECK(total == 64);
}

TEST_CASE("coarse chambers carry Schur polynomials") {
    Tableau q{{{1, 2}, {3}}};
    CHECK(ipe(coarse_points(q, 2)) == schur_table({2, 1}, 2));
    Tableau q2{{{1, 3}, {2}}};
    CHECK(ipe(coarse_points(q2, 2)) == schur_table({2, 1}, 2));
}

TEST_CASE("coarse chamber membership via RSK") {
    Tableau q{{{1, 3, 4, 5, 6}, {2}}};
    LatticePointSet pts = coarse_points(q, 1);
    bool found = false;
    for (const auto& v : pts.points)
        if (v == std::vector<int>{1, 0, 0, 1, 1, 1}) found = true;
    CHECK(found);
}

TEST_CASE("minimal chamber vertex") {
    // pi = (3,1,2): descent at position 1, so p_3 = 0, p_1 = 1, p_2 = 1.
    CHECK(chamber_min_vertex({3, 1, 2}) == std::vector<int>{1, 1, 0});
    CHECK(chamber_min_vertex({1, 2, 3}) == std::vector<int>{0, 0, 0});
    for (const auto& pi : permutations_of(4)) {
        auto p = chamber_min_vertex(pi);
        CHECK(chamber_of_point(p) == pi);
    }
}

TEST_CASE("face of a point") {
    OrderedSetPartition f = face_of_point({1, 0, 0, 1, 1, 1});
    CHECK(f == OrderedSetPartition{{2, 3}, {1, 4, 5, 6}});
}

TEST_CASE("direct quantum count matches the closed form") {
    for (const Partition& mu : {Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
        QSeries s = series_expand(qehr_mu(mu), 4);
        for (const auto& q : syt_enumerate(mu))
            for (int h = 0; h <= 4; ++h)
                CHECK(quantum_ehrhart_direct(q, h) == s[static_cast<std::size_t>(h)]);
    }
}

TEST_CASE("work bounds refuse oversized inputs") {
    Tableau big{{{1, 2, 3, 4, 5, 6, 7}}};
    CHECK_THROWS_AS(coarse_points(big, 11), ResourceError);
}
