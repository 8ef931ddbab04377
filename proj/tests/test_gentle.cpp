#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "relquiv/gentle.hpp"

using namespace relquiv;

namespace {

ExtLetter old_letter(int i) { return ExtLetter{false, i}; }
ExtLetter new_letter(int i) { return ExtLetter{true, i}; }

}  // namespace

TEST_CASE("non-gentle inputs are rejected") {
    CHECK_THROWS_AS(require_gentle_tree(load_fixture("fix-b")), AxiomError);
    CHECK_THROWS_AS(require_gentle_tree(load_fixture("fix-d")), AxiomError);
    CHECK_THROWS_AS(require_gentle_tree(load_fixture("fix-a")), AxiomError);
    CHECK_NOTHROW(require_gentle_tree(load_fixture("fix-e")));
}

TEST_CASE("overlappings on fix-e") {
    StringPresentation P = load_fixture("fix-e");
    std::vector<Overlapping> os = maximal_overlappings(P);
    REQUIRE(os.size() == 2);

    CHECK(os[0].t() == 1);
    CHECK(os[0].generators == std::vector<int>{0});
    CHECK(os[0].shared.empty());
    CHECK(os[0].support ==
          std::vector<int>{P.arrow_index("a"), P.arrow_index("b")});
    CHECK(P.vertex_names[os[0].c] == "1");
    CHECK(P.vertex_names[os[0].z] == "3");

    CHECK(os[1].t() == 1);
    CHECK(os[1].generators == std::vector<int>{1});
    CHECK(os[1].support ==
          std::vector<int>{P.arrow_index("c"), P.arrow_index("d")});
    CHECK(P.vertex_names[os[1].c] == "4");
    CHECK(P.vertex_names[os[1].z] == "6");
}

TEST_CASE("a two-relation chain forms one overlapping") {
    StringPresentation P = parse_bqv(
        "vertices: 1 2 3 4\n"
        "arrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\n"
        "relation: a b\n"
        "relation: b c\n");
    require_gentle_tree(P);
    std::vector<Overlapping> os = maximal_overlappings(P);
    REQUIRE(os.size() == 1);
    CHECK(os[0].t() == 2);
    CHECK(os[0].generators == std::vector<int>{0, 1});
    CHECK(os[0].shared == std::vector<int>{1});  // the arrow b
    CHECK(os[0].support == std::vector<int>{0, 1, 2});
    CHECK(os[0].c == 0);
    CHECK(os[0].z == 3);

    std::vector<NewArrow> as = gentle_new_arrows(P);
    REQUIRE(as.size() == 1);
    CHECK(as[0].z == 3);
    CHECK(as[0].c == 0);
    CHECK(as[0].degree == 3);
    CHECK(as[0].prov == Provenance::Overlap);
    CHECK(as[0].name == "x_4_1_3");
}

TEST_CASE("gentle arrow degrees are overlap lengths plus one") {
    StringPresentation P = load_fixture("fix-e");
    std::vector<NewArrow> as = gentle_new_arrows(P);
    REQUIRE(as.size() == 2);
    CHECK(as[0].degree == 2);
    CHECK(as[1].degree == 2);
    CHECK(as[0].name == "x_3_1_2");
    CHECK(as[1].name == "x_6_4_2");
    CHECK_FALSE(as[0].witness.has_value());
}

TEST_CASE("tensor relations on fix-e") {
    StringPresentation P = load_fixture("fix-e");
    std::vector<ExtWord> rels = tensor_relations(P);
    int a = P.arrow_index("a"), b = P.arrow_index("b");
    int c = P.arrow_index("c"), d = P.arrow_index("d");
    REQUIRE(rels.size() == 6);
    CHECK(rels[0] == ExtWord{old_letter(a), old_letter(b)});
    CHECK(rels[1] == ExtWord{old_letter(c), old_letter(d)});
    // Per chain: new arrow then the first support arrow, and the last
    // support arrow then the new arrow.
    CHECK(std::count(rels.begin(), rels.end(),
                     ExtWord{new_letter(0), old_letter(a)}) == 1);
    CHECK(std::count(rels.begin(), rels.end(),
                     ExtWord{old_letter(b), new_letter(0)}) == 1);
    CHECK(std::count(rels.begin(), rels.end(),
                     ExtWord{new_letter(1), old_letter(c)}) == 1);
    CHECK(std::count(rels.begin(), rels.end(),
                     ExtWord{old_letter(d), new_letter(1)}) == 1);
}

TEST_CASE("trivial extension adds the connecting words") {
    StringPresentation P = load_fixture("fix-e");
    std::vector<ExtWord> tens = tensor_relations(P);
    std::vector<ExtWord> triv = trivial_extension_relations(P);
    REQUIRE(triv.size() == tens.size() + 1);
    for (const ExtWord& w : tens) CHECK(std::count(triv.begin(), triv.end(), w) == 1);
    ExtWord extra;
    for (const ExtWord& w : triv)
        if (std::count(tens.begin(), tens.end(), w) == 0) extra = w;
    // zeta_2 r zeta_1: from 6 back through r to 1 and out again.
    REQUIRE(extra.size() == 3);
    CHECK(extra[0] == new_letter(1));
    CHECK(extra[1] == old_letter(P.arrow_index("r")));
    CHECK(extra[2] == new_letter(0));
}

TEST_CASE("a single chain has coinciding tensor and trivial relations") {
    StringPresentation P = parse_bqv(
        "vertices: 1 2 3 4\n"
        "arrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\n"
        "relation: a b\n"
        "relation: b c\n");
    // The only candidate zeta rho zeta is killed by the quadratic tensor
    // words around zeta itself.
    CHECK(trivial_extension_relations(P) == tensor_relations(P));
}

TEST_CASE("relation-free gentle trees have no overlappings") {
    StringPresentation P = parse_bqv(
        "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n");
    require_gentle_tree(P);
    CHECK(maximal_overlappings(P).empty());
    CHECK(gentle_new_arrows(P).empty());
    CHECK(tensor_relations(P).empty());
    CHECK(trivial_extension_relations(P).empty());
}

TEST_CASE("ext words print with both alphabets") {
    StringPresentation P = load_fixture("fix-e");
    std::vector<NewArrow> as = gentle_new_arrows(P);
    ExtWord w{new_letter(1), old_letter(P.arrow_index("r")), new_letter(0)};
    std::string s = ext_word_to_string(P, as, w);
    CHECK(s.find("x_6_4_2") != std::string::npos);
    CHECK(s.find("r") != std::string::npos);
    CHECK(s.find("x_3_1_2") != std::string::npos);
}
