#include "doctest.h"

#include "uqcas/coideal.hpp"

#include <set>

using namespace uqcas;

TEST_CASE("reflected quotient with empty support is the identity map") {
    RootDatum D = RootDatum::from_name("A2");
    for (const auto& w : all_weyl_elements(D))
        CHECK(reflected_quotient(w, {}) == w);
}

TEST_CASE("reflected quotient in rank two") {
    RootDatum D = RootDatum::from_name("A2");
    std::vector<RootVec> supp = {D.simple(0)};

    WeylElt w0 = WeylElt::from_word(D, {0, 1, 0});
    CHECK(reflected_quotient(w0, supp) == WeylElt::from_word(D, {1, 0}));

    WeylElt w = WeylElt::from_word(D, {0, 1});
    CHECK(reflected_quotient(w, supp) == WeylElt::from_word(D, {1}));
}

TEST_CASE("reflected quotient with two orthogonal support roots") {
    RootDatum D = RootDatum::from_name("A3");
    std::vector<RootVec> supp = {D.simple(0), D.simple(2)};
    WeylElt w = WeylElt::from_word(D, {2, 0, 1});
    CHECK(reflected_quotient(w, supp) == WeylElt::from_word(D, {1}));

    WeylElt longer = WeylElt::from_word(D, {2, 0, 1, 0});
    CHECK(reflected_quotient(longer, supp) == WeylElt::from_word(D, {1, 0}));
}

TEST_CASE("reflected quotient applied twice returns the original element") {
    RootDatum D = RootDatum::from_name("A2");
    for (const auto& w : all_weyl_elements(D))
        for (const auto& simples : valid_supports(w)) {
            std::vector<RootVec> supp;
            for (int i : simples) supp.push_back(D.simple(i));
            WeylElt v = reflected_quotient(w, supp);
            CHECK(reflected_quotient(v, supp) == w);
        }
}

TEST_CASE("reflected quotient rejects non orthogonal support roots") {
    RootDatum D = RootDatum::from_name("A2");
    WeylElt w0 = WeylElt::from_word(D, {0, 1, 0});
    std::vector<RootVec> supp = {D.simple(0), D.simple(1)};
    CHECK_THROWS_AS(reflected_quotient(w0, supp), std::invalid_argument);
}

TEST_CASE("graded analysis of the rank one weyl family") {
    RootDatum D = RootDatum::from_name("A1");
    UqAlgebra U(D);
    WeylElt w = WeylElt::from_word(D, {0});
    Character phi = Character::on_simples(w, {0});

    GradedReport rep = graded_algebra(U, phi);
    CHECK(rep.verdict == "match");
    CHECK(rep.w_prime == WeylElt(&D));
    CHECK(rep.group_rank == 1);
    REQUIRE(rep.semigroup_gens.size() == 1);
    CHECK(rep.semigroup_gens[0] == RootVec{-1});
    CHECK(rep.detected_roots.empty());
    CHECK(rep.hilbert_checked);
    CHECK(rep.hilbert_ok);

    GrowthCheck g = growth_identity_check(rep);
    CHECK(g.length_ok);
    CHECK(g.length == 1);
    CHECK(g.rank == 1);
    CHECK(g.quotient_length == 0);
}

TEST_CASE("graded analysis detects the quotient for the longest rank two word") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    WeylElt w = WeylElt::from_word(D, {0, 1, 0});
    Character phi = Character::on_simples(w, {0});

    GradedReport rep = graded_algebra(U, phi);
    CHECK(rep.verdict == "match");
    CHECK(rep.w_prime == WeylElt::from_word(D, {1, 0}));
    CHECK(rep.w_prime == rep.w_prime_predicted);
    CHECK(rep.group_rank == 1);
    REQUIRE(rep.semigroup_gens.size() == 1);
    CHECK(rep.semigroup_gens[0] == RootVec{-1, 0});

    std::set<RootVec> roots(rep.detected_roots.begin(), rep.detected_roots.end());
    CHECK(roots == std::set<RootVec>{{0, 1}, {1, 1}});

    CHECK(rep.hilbert_checked);
    CHECK(rep.hilbert_ok);

    GrowthCheck g = growth_identity_check(rep);
    CHECK(g.length_ok);
    CHECK(g.length == 3);
    CHECK(g.rank == 1);
    CHECK(g.quotient_length == 2);
}

TEST_CASE("graded analysis of a non graded shifted algebra") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    WeylElt w = WeylElt::from_word(D, {0, 1});
    Character phi = Character::on_simples(w, {0});

    GradedReport rep = graded_algebra(U, phi);
    CHECK(rep.verdict == "match");
    CHECK(rep.w_prime == WeylElt::from_word(D, {1}));
    CHECK(rep.group_rank == 1);
    CHECK(rep.hilbert_ok);

    GrowthCheck g = growth_identity_check(rep);
    CHECK(g.length_ok);
    CHECK(g.length == 2);
    CHECK(g.rank == 1);
    CHECK(g.quotient_length == 1);
}

TEST_CASE("graded analysis with a rank two support") {
    RootDatum D = RootDatum::from_name("A3");
    UqAlgebra U(D);

    WeylElt w = WeylElt::from_word(D, {2, 0, 1});
    GradedReport rep = graded_algebra(U, Character::on_simples(w, {0, 2}));
    CHECK(rep.verdict == "match");
    CHECK(rep.w_prime == WeylElt::from_word(D, {1}));
    CHECK(rep.group_rank == 2);
    std::set<RootVec> gens(rep.semigroup_gens.begin(), rep.semigroup_gens.end());
    CHECK(gens == std::set<RootVec>{{-1, 0, 0}, {0, 0, -1}});
    CHECK(rep.hilbert_ok);

    GrowthCheck g = growth_identity_check(rep);
    CHECK(g.length_ok);
    CHECK(g.length == 3);
    CHECK(g.rank == 2);
    CHECK(g.quotient_length == 1);

    WeylElt longer = WeylElt::from_word(D, {2, 0, 1, 0});
    GradedReport rep2 = graded_algebra(U, Character::on_simples(longer, {0, 2}));
    CHECK(rep2.verdict == "match");
    CHECK(rep2.w_prime == WeylElt::from_word(D, {1, 0}));
    CHECK(rep2.hilbert_ok);
    GrowthCheck g2 = growth_identity_check(rep2);
    CHECK(g2.length_ok);
    CHECK(g2.length == 4);
    CHECK(g2.rank == 2);
    CHECK(g2.quotient_length == 2);
}

TEST_CASE("graded analysis of a trivial character returns the element itself") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    WeylElt w = WeylElt::from_word(D, {0, 1});

    GradedReport rep = graded_algebra(U, Character::trivial(w));
    CHECK(rep.verdict == "match");
    CHECK(rep.w_prime == w);
    CHECK(rep.w_prime_predicted == w);
    CHECK(rep.group_rank == 0);
    CHECK(rep.growth_ok);
    CHECK_FALSE(rep.hilbert_checked);

    GrowthCheck g = growth_identity_check(rep);
    CHECK(g.length_ok);
    CHECK(g.rank == 0);
    CHECK(g.quotient_length == g.length);
}

TEST_CASE("graded analysis rejects support outside the inversion set") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    WeylElt w = WeylElt::from_word(D, {0});
    Character phi = Character::normalized(w, {D.simple(1)});
    CHECK_THROWS_AS(graded_algebra(U, phi), std::invalid_argument);
}

TEST_CASE("second criterion needs two distinct free endings") {
    RootDatum A2 = RootDatum::from_name("A2");

    WeylElt w0 = WeylElt::from_word(A2, {0, 1, 0});
    Criterion2Result both = criterion2_applicable(w0, {});
    CHECK(both.applicable);
    CHECK(both.descent_i != both.descent_l);
    std::set<int> descents{both.descent_i, both.descent_l};
    CHECK(descents == std::set<int>{0, 1});

    WeylElt s1 = WeylElt::from_word(A2, {0});
    CHECK_FALSE(criterion2_applicable(s1, {}).applicable);

    RootDatum A3 = RootDatum::from_name("A3");
    WeylElt u = WeylElt::from_word(A3, {2, 0, 1});
    CHECK_FALSE(criterion2_applicable(u, {}).applicable);
}

TEST_CASE("second criterion respects the support filter") {
    RootDatum D = RootDatum::from_name("A2");
    WeylElt w0 = WeylElt::from_word(D, {0, 1, 0});
    CHECK_FALSE(criterion2_applicable(w0, {D.simple(1)}).applicable);
    CHECK_FALSE(criterion2_applicable(w0, {D.simple(0)}).applicable);
}
