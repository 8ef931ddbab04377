#include <doctest.h>

#include "fixtures.hpp"
#include "relquiv/generator.hpp"

using namespace relquiv;

TEST_CASE("same seed, same tree") {
    GeneratorOptions opt;
    opt.n_vertices = 10;
    for (std::uint64_t seed : {1ULL, 7ULL, 4242ULL}) {
        Rng r1(seed), r2(seed);
        CHECK(serialize_bqv(random_string_tree(r1, opt)) ==
              serialize_bqv(random_string_tree(r2, opt)));
    }
}

TEST_CASE("every sample is a valid string tree") {
    GeneratorOptions opt;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        opt.n_vertices = 1 + static_cast<int>(seed % 12);
        opt.density = 0.2 + 0.1 * static_cast<double>(seed % 7);
        opt.gentle = false;
        StringPresentation P = random_string_tree(rng, opt);
        ValidationReport rep = validate(P);
        CAPTURE(seed);
        CHECK(rep.string_tree());
        CHECK(P.n_vertices() == opt.n_vertices);
    }
}

TEST_CASE("gentle mode yields gentle trees") {
    GeneratorOptions opt;
    opt.gentle = true;
    for (std::uint64_t seed = 100; seed < 150; ++seed) {
        Rng rng(seed);
        opt.n_vertices = 2 + static_cast<int>(seed % 10);
        StringPresentation P = random_string_tree(rng, opt);
        ValidationReport rep = validate(P);
        CAPTURE(seed);
        CHECK(rep.string_tree());
        CHECK(rep.is_gentle());
    }
}

TEST_CASE("degrees stay within the axiom bound") {
    GeneratorOptions opt;
    opt.n_vertices = 12;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        StringPresentation P = random_string_tree(rng, opt);
        for (int v = 0; v < P.n_vertices(); ++v) {
            CHECK(P.out_arrows[v].size() <= 2);
            CHECK(P.in_arrows[v].size() <= 2);
        }
    }
}

TEST_CASE("single vertex degenerates gracefully") {
    GeneratorOptions opt;
    opt.n_vertices = 1;
    Rng rng(3);
    StringPresentation P = random_string_tree(rng, opt);
    CHECK(P.n_vertices() == 1);
    CHECK(P.n_arrows() == 0);
    CHECK(validate(P).string_tree());
}

TEST_CASE("long relations do appear in string mode") {
    GeneratorOptions opt;
    opt.n_vertices = 12;
    opt.density = 0.7;
    opt.long_relations = true;
    int found = 0;
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Rng rng(seed);
        StringPresentation P = random_string_tree(rng, opt);
        for (const auto& rel : P.relations)
            if (rel.size() >= 3) ++found;
    }
    CHECK(found > 0);

    // Gentle mode never emits them.
    opt.gentle = true;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        StringPresentation P = random_string_tree(rng, opt);
        for (const auto& rel : P.relations) CHECK(rel.size() == 2);
    }
}
