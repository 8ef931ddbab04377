#include <doctest.h>

#include "fixtures.hpp"
#include "relquiv/modules.hpp"

using namespace relquiv;

TEST_CASE("projective bases") {
    StringPresentation P = load_fixture("fix-a");
    std::vector<Path> b1 = projective_basis(P, 0);
    REQUIRE(b1.size() == 3);  // e1, a, ab; abc dies
    CHECK(b1[0].stationary());
    CHECK(b1[1].arrows == std::vector<int>{0});
    CHECK(b1[2].arrows == std::vector<int>{0, 1});

    // A sink carries only its simple.
    std::vector<Path> b4 = projective_basis(P, 3);
    REQUIRE(b4.size() == 1);
    CHECK(b4[0].stationary());
    CHECK(projective_module(P, 3).total_dim() == 1);
}

TEST_CASE("projective and injective modules satisfy the relations") {
    for (const char* name : {"fix-a", "fix-b", "fix-c", "fix-d", "fix-e", "fix-f"}) {
        StringPresentation P = load_fixture(name);
        for (int v = 0; v < P.n_vertices(); ++v) {
            CAPTURE(name);
            CAPTURE(v);
            CHECK(relations_vanish(P, projective_module(P, v)));
            CHECK(relations_vanish(P, injective_module(P, v)));
        }
    }
}

TEST_CASE("intervals require a nonzero path") {
    StringPresentation P = load_fixture("fix-a");
    CHECK_THROWS_AS(make_interval(P, 0, 3), std::invalid_argument);  // abc = 0
    CHECK_THROWS_AS(make_interval(P, 1, 0), std::invalid_argument);  // wrong direction

    Interval iv = make_interval(P, 0, 2);
    CHECK(iv.path.arrows == std::vector<int>{0, 1});
    Representation M = interval_module(P, iv);
    CHECK(M.dims == std::vector<int>{1, 1, 1, 0});
    CHECK(M.total_dim() == 3);
    CHECK(relations_vanish(P, M));

    Interval st = make_interval(P, 1, 1);
    CHECK(st.stationary());
    CHECK(interval_module(P, st).dims == std::vector<int>{0, 1, 0, 0});
}

TEST_CASE("injective at a sink agrees with an interval") {
    StringPresentation P = load_fixture("fix-a");
    Representation I4 = injective_module(P, 3);
    Representation M = interval_module(P, make_interval(P, 1, 3));
    CHECK(I4.dims == M.dims);  // both live on 2 .. 4
    CHECK(I4.total_dim() == 3);
}

TEST_CASE("string modules from walks") {
    StringPresentation P = load_fixture("fix-a");
    Walk w{0, {{0, false}}};  // the arrow a as a walk
    CHECK(walk_vertices(P, w) == std::vector<int>{0, 1});
    Representation S = string_module(P, w);
    Representation M = interval_module(P, make_interval(P, 0, 1));
    CHECK(S.dims == M.dims);
    CHECK(S.mats[0].rows == 1);
    CHECK(S.mats[0].cols == 1);

    StringPresentation D = load_fixture("fix-d");
    int b = D.arrow_index("b"), d = D.arrow_index("d");
    Walk valley{D.vertex_index("3"), {{b, true}, {d, false}}};
    CHECK(walk_vertices(D, valley) ==
          std::vector<int>{D.vertex_index("3"), D.vertex_index("2"), D.vertex_index("5")});
    Representation V = string_module(D, valley);
    CHECK(V.total_dim() == 3);
    CHECK(relations_vanish(D, V));
}

TEST_CASE("bad walks are rejected") {
    StringPresentation P = load_fixture("fix-a");
    CHECK_THROWS(walk_vertices(P, Walk{0, {{2, false}}}));          // does not attach
    CHECK_THROWS(walk_vertices(P, Walk{1, {{0, true}, {0, false}}}));  // not reduced
}
