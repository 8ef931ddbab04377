#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"

using namespace relquiv;

TEST_CASE("parse and validate the fixture corpus") {
    for (const char* name : {"fix-a", "fix-b", "fix-c", "fix-d", "fix-e", "fix-f"}) {
        StringPresentation P = load_fixture(name);
        ValidationReport rep = validate(P);
        CAPTURE(name);
        CHECK(rep.string_tree());
    }
    CHECK(validate(load_fixture("fix-e")).is_gentle());
    CHECK_FALSE(validate(load_fixture("fix-b")).is_gentle());
    CHECK_FALSE(validate(load_fixture("fix-d")).is_gentle());
    CHECK_FALSE(validate(load_fixture("fix-a")).is_gentle());  // length-3 generator
}

TEST_CASE("degenerate and malformed inputs") {
    StringPresentation one = parse_bqv("vertices: 1\n");
    ValidationReport rep = validate(one);
    CHECK(rep.string_tree());
    CHECK(rep.is_gentle());

    CHECK_THROWS_AS(parse_bqv("vertices: 1 2\narrow a: 1 -> 2\nrelation: a x\n"), ParseError);
    CHECK_THROWS_AS(parse_bqv("vertices: 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_bqv("vertices: 1 2\narrow a: 1 -> 3\n"), ParseError);
    // Non-composable relation word.
    CHECK_THROWS_AS(
        parse_bqv("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 1 -> 3\nrelation: a b\n"),
        ParseError);

    StringPresentation s2 = load_fixture("bad-s2");
    CHECK_FALSE(validate(s2).s2);
    CHECK_FALSE(validate(s2).is_string());
}

TEST_CASE("zero words are detected by contiguous subwords") {
    StringPresentation P = load_fixture("fix-a");
    int a = P.arrow_index("a"), b = P.arrow_index("b"), c = P.arrow_index("c");
    CHECK(P.word_is_zero({a, b, c}));
    CHECK_FALSE(P.word_is_zero({a, b}));
    CHECK_FALSE(P.word_is_zero({b, c}));

    StringPresentation B = load_fixture("fix-b");
    CHECK(B.word_is_zero({B.arrow_index("a"), B.arrow_index("b")}));
    CHECK(B.word_is_zero({B.arrow_index("d"), B.arrow_index("c")}));
    CHECK_FALSE(B.word_is_zero({B.arrow_index("d")}));
}

TEST_CASE("composition of paths") {
    StringPresentation P = load_fixture("fix-a");
    Path e1 = stationary_path(0);
    auto ee = compose(P, e1, e1);
    REQUIRE(ee.has_value());
    CHECK(ee->stationary());

    Path ab{0, {P.arrow_index("a"), P.arrow_index("b")}};
    Path c{2, {P.arrow_index("c")}};
    CHECK_FALSE(compose(P, ab, c).has_value());  // abc = 0
    CHECK_THROWS(compose(P, c, ab));             // endpoints do not meet
}

TEST_CASE("maximal nonzero paths") {
    StringPresentation P = load_fixture("fix-c");
    int v3 = P.vertex_index("3");
    std::vector<Path> ms = maximal_nonzero_paths_from(P, v3);
    REQUIRE(ms.size() == 2);
    std::set<int> targets;
    for (const Path& m : ms) targets.insert(m.target(P));
    CHECK(targets == std::set<int>{P.vertex_index("5"), P.vertex_index("15")});

    // Sink: only the stationary path.
    std::vector<Path> sink = maximal_nonzero_paths_from(P, P.vertex_index("17"));
    REQUIRE(sink.size() == 1);
    CHECK(sink[0].stationary());

    // Dual enumeration via the opposite quiver.
    std::vector<Path> into = maximal_nonzero_paths_to(P, P.vertex_index("3"));
    REQUIRE(into.size() == 2);
    for (const Path& m : into) CHECK(m.target(P) == v3);
}

TEST_CASE("two maximal paths from a vertex start with different arrows") {
    for (const char* name : {"fix-b", "fix-c", "fix-d", "fix-f"}) {
        StringPresentation P = load_fixture(name);
        for (int v = 0; v < P.n_vertices(); ++v) {
            std::vector<Path> ms = maximal_nonzero_paths_from(P, v);
            CHECK(ms.size() <= 2);
            if (ms.size() == 2) {
                REQUIRE(!ms[0].arrows.empty());
                REQUIRE(!ms[1].arrows.empty());
                CHECK(ms[0].arrows[0] != ms[1].arrows[0]);
            }
        }
    }
}

TEST_CASE("opposite is an involution") {
    for (const char* name : {"fix-a", "fix-c", "fix-e"}) {
        StringPresentation P = load_fixture(name);
        CHECK(serialize_bqv(P.opposite().opposite()) == serialize_bqv(P));
    }
}

TEST_CASE("serialization round trip") {
    for (const char* name : {"fix-a", "fix-b", "fix-c", "fix-d", "fix-e", "fix-f"}) {
        StringPresentation P = load_fixture(name);
        std::string s = serialize_bqv(P);
        CHECK(serialize_bqv(parse_bqv(s)) == s);
    }
}

TEST_CASE("relation normalization drops redundant generators") {
    StringPresentation P = parse_bqv(
        "vertices: 1 2 3 4\n"
        "arrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\n"
        "relation: a b\n"
        "relation: a b\n"
        "relation: a b c\n");
    CHECK(P.relations.size() == 1);
    CHECK(P.relations[0] == std::vector<int>{0, 1});
}

TEST_CASE("find_path walks the tree") {
    StringPresentation P = load_fixture("fix-c");
    auto p = find_path(P, P.vertex_index("3"), P.vertex_index("13"));
    REQUIRE(p.has_value());
    CHECK(p->target(P) == P.vertex_index("13"));
    CHECK_FALSE(find_path(P, P.vertex_index("13"), P.vertex_index("3")).has_value());
    auto st = find_path(P, 2, 2);
    REQUIRE(st.has_value());
    CHECK(st->stationary());
}
