#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "relquiv/extension.hpp"

using namespace relquiv;

TEST_CASE("tensor extension of fix-e is gentle") {
    StringPresentation P = load_fixture("fix-e");
    ExtendedPresentation E = build_extension(P, ExtensionMode::Tensor);
    CHECK(E.relations_specified);
    CHECK(E.gentle);
    // Longer cycles appear (1 a 2 b 3 x_3_1_2 back), but no 2-cycles.
    CHECK_FALSE(E.has_two_cycle);
    REQUIRE(E.arrows.size() == 2);
    CHECK(E.overlaps[0].has_value());
    CHECK(E.overlaps[1].has_value());

    StringPresentation Q = to_presentation(E);
    CHECK(Q.n_arrows() == P.n_arrows() + 2);
    CHECK(Q.arrow_index("x_3_1_2") >= 0);
    CHECK(Q.arrow_index("x_6_4_2") >= 0);
    CHECK(Q.relations.size() == 6);
    ValidationReport rep = validate(Q);
    CHECK(rep.is_gentle());
    CHECK_FALSE(rep.admissible);  // directed cycles through the new arrows
}

TEST_CASE("trivial extension of fix-e is monomial but not gentle") {
    StringPresentation P = load_fixture("fix-e");
    ExtendedPresentation E = build_extension(P, ExtensionMode::Trivial);
    CHECK(E.relations_specified);
    CHECK(E.monomial);
    CHECK_FALSE(E.gentle);
    REQUIRE(E.relations.size() == 7);
    bool has_long = false;
    for (const ExtWord& w : E.relations)
        if (w.size() == 3 && w[0].is_new && !w[1].is_new && w[2].is_new) has_long = true;
    CHECK(has_long);
    CHECK_FALSE(validate(to_presentation(E)).g2);
}

TEST_CASE("string but non-gentle bases get arrows without relations") {
    StringPresentation D = load_fixture("fix-d");
    ExtendedPresentation E = build_extension(D, ExtensionMode::Tensor);
    CHECK_FALSE(E.relations_specified);
    CHECK(E.relations.empty());
    CHECK(E.arrows.size() == 5);
    for (const auto& o : E.overlaps) CHECK_FALSE(o.has_value());
    for (const NewArrow& a : E.arrows) {
        CHECK(a.prov == Provenance::Witness);
        CHECK(a.witness.has_value());
    }
    CHECK(E.has_two_cycle);  // x_2_1_2 against the arrow 1 -> 2

    StringPresentation Q = to_presentation(E);
    CHECK(Q.n_arrows() == D.n_arrows() + 5);
    CHECK(Q.relations.size() == D.relations.size());
}

TEST_CASE("json round trips byte for byte") {
    for (const char* name : {"fix-a", "fix-b", "fix-c", "fix-d", "fix-e", "fix-f"}) {
        for (ExtensionMode mode : {ExtensionMode::Tensor, ExtensionMode::Trivial}) {
            StringPresentation P = load_fixture(name);
            ExtendedPresentation E = build_extension(P, mode);
            std::string js = extension_to_json(E);
            ExtendedPresentation back = extension_from_json(js);
            CAPTURE(name);
            CHECK(extension_to_json(back) == js);
            CHECK(back.relations_specified == E.relations_specified);
            CHECK(back.gentle == E.gentle);
            CHECK(back.monomial == E.monomial);
            CHECK(back.has_two_cycle == E.has_two_cycle);
            CHECK(back.arrows.size() == E.arrows.size());
            CHECK(serialize_bqv(back.base) == serialize_bqv(E.base));
        }
    }
}

TEST_CASE("dot output dashes the new arrows") {
    StringPresentation P = load_fixture("fix-e");
    ExtendedPresentation E = build_extension(P, ExtensionMode::Tensor);
    std::string dot = extension_to_dot(E);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);
    CHECK(dot.find("x_3_1_2") != std::string::npos);
}

TEST_CASE("theorem check on fix-e") {
    ExtEngine E(load_fixture("fix-e"));
    TheoremReport rep = verify_theorem_7_1(E);
    CHECK(rep.tensor_gentle);
    CHECK(rep.trivial_monomial);
    CHECK(rep.arrows_match);
    CHECK(rep.ok());
}

TEST_CASE("relation-free gentle base extends to itself") {
    StringPresentation P = parse_bqv("vertices: 1 2\narrow a: 1 -> 2\n");
    ExtendedPresentation E = build_extension(P, ExtensionMode::Tensor);
    CHECK(E.arrows.empty());
    CHECK(E.relations_specified);
    CHECK(E.relations.empty());
    CHECK_FALSE(E.has_two_cycle);
    CHECK(E.gentle);
    StringPresentation Q = to_presentation(E);
    CHECK(Q.n_arrows() == 1);
}

TEST_CASE("building from an engine matches the presentation overload") {
    StringPresentation B = load_fixture("fix-b");
    ExtEngine E(B);
    std::string a = extension_to_json(build_extension(B, ExtensionMode::Tensor));
    std::string b = extension_to_json(build_extension(E, ExtensionMode::Tensor));
    CHECK(a == b);
}
