#include "doctest.h"

#include "uqcas/coideal.hpp"

#include <vector>

using namespace uqcas;

namespace {

AlgElt qcomm(const UqAlgebra& U, const AlgElt& x, const AlgElt& y, const RatFunc& v) {
    return U.mul(x, y) - U.mul(y, x) * v;
}

AlgElt qbracket(const UqAlgebra& U, const AlgElt& x, const AlgElt& y, long e) {
    return qcomm(U, x, y, RatFunc::q_power(e));
}

} // namespace

TEST_CASE("pbw span enumerates and solves ordered monomials") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    WeylElt w0 = WeylElt::from_word(D, {0, 1, 0});
    PbwSpan span(U, w0, Side::FMinus);
    REQUIRE(span.size() == 3);
    CHECK(span.root(0) == RootVec{1, 0});
    CHECK(span.root(1) == RootVec{1, 1});
    CHECK(span.root(2) == RootVec{0, 1});

    auto& exps = span.exponents(RootVec{1, 1});
    REQUIRE(exps.size() == 2);

    auto coords = span.coordinates(span.monomial({1, 0, 1}));
    REQUIRE(coords.has_value());
    REQUIRE(coords->size() == 1);
    CHECK((*coords)[0].first == std::vector<int>{1, 0, 1});
    CHECK((*coords)[0].second == RatFunc(1));

    AlgElt f2f1 = U.mul(U.F(1), U.F(0));
    CHECK(span.contains(f2f1));

    WeylElt w12 = WeylElt::from_word(D, {0, 1});
    PbwSpan small(U, w12, Side::FMinus);
    CHECK_FALSE(small.contains(f2f1));

    PbwSpan plus(U, w12, Side::EPlusAntipode);
    AlgElt e1k = U.mul(U.E(0), U.Ki(0, -1));
    CHECK(plus.contains(e1k));
    CHECK_FALSE(plus.contains(U.E(0)));
}

TEST_CASE("quantum Weyl algebra from rank one shifts") {
    RootDatum D = RootDatum::from_name("A1");
    UqAlgebra U(D);
    WeylElt s1 = WeylElt::from_word(D, {0});
    RatFunc lam = sl2_lambda();
    RatFunc lamp = sl2_lambda_prime(U, 0);

    RatFunc q2 = RatFunc::q_power(2);
    RatFunc expected_product = q2 / ((RatFunc(1) - q2) * (RatFunc::q_power(1) - RatFunc::q_power(-1)));
    CHECK(lam * lamp == expected_product);

    Character phim = Character::with_values(s1, {D.simple(0)}, {lamp});
    AlgElt fbar = character_shift(U, phim, U.F(0));
    CHECK(fbar == U.F(0) + U.Ki(0, -1) * lamp);

    Character phip = Character::with_values(s1, {D.simple(0)}, {lam});
    AlgElt e1k = U.mul(U.E(0), U.Ki(0, -1));
    AlgElt ebar = character_shift_plus(U, phip, e1k);
    CHECK(ebar == e1k + U.Ki(0, -1) * lam);

    AlgElt rel = qbracket(U, ebar, fbar, 2);
    AlgElt expected = U.one() * (q2 / (RatFunc::q_power(1) - RatFunc::q_power(-1)));
    CHECK(rel == expected);
}

TEST_CASE("quantum Weyl pair at a long root keeps track of d_i") {
    RootDatum D = RootDatum::from_name("B2");
    UqAlgebra U(D);
    REQUIRE(D.sym_d(1) == 2);
    WeylElt s2 = WeylElt::from_word(D, {1});
    RatFunc lamp = sl2_lambda_prime(U, 1);

    Character phim = Character::with_values(s2, {D.simple(1)}, {lamp});
    AlgElt fbar = character_shift(U, phim, U.F(1));
    CHECK(fbar == U.F(1) + U.Ki(1, -1) * lamp);

    Character phip = Character::with_values(s2, {D.simple(1)}, {RatFunc(1)});
    AlgElt e2k = U.mul(U.E(1), U.Ki(1, -1));
    AlgElt ebar = character_shift_plus(U, phip, e2k);
    CHECK(ebar == e2k + U.Ki(1, -1));

    AlgElt rel = qbracket(U, ebar, fbar, 4);
    RatFunc q4 = RatFunc::q_power(4);
    AlgElt expected = U.one() * (q4 / (RatFunc::q_power(2) - RatFunc::q_power(-2)));
    CHECK(rel == expected);
}

TEST_CASE("trivial character shift is the identity map") {
    RootDatum D = RootDatum::from_name("A3");
    UqAlgebra U(D);
    WeylElt u = WeylElt::from_word(D, {2, 0, 1});
    AlgElt f123 = root_vector_F(U, {2, 0, 1}, 3);
    Character triv = Character::trivial(u);
    CHECK(character_shift(U, triv, f123) == f123);
    AlgElt prod = U.mul(f123, root_vector_F(U, {2, 0, 1}, 1));
    CHECK(character_shift(U, triv, prod) == prod);
}

TEST_CASE("shift expansions of the rank three example") {
    RootDatum D = RootDatum::from_name("A3");
    UqAlgebra U(D);
    WeylElt u = WeylElt::from_word(D, {2, 0, 1});
    AlgElt f123 = root_vector_F(U, {2, 0, 1}, 3);
    RatFunc qm = RatFunc::q_power(-1) - RatFunc::q_power(1);
    AlgElt br32 = qbracket(U, U.F(2), U.F(1), 1);
    AlgElt br12 = qbracket(U, U.F(0), U.F(1), 1);

    std::vector<std::pair<RatFunc, RatFunc>> values = {
        {RatFunc(1), RatFunc(1)},
        {RatFunc::q_power(1), RatFunc::frac(2, 7)},
        {RatFunc::q_power(1) + RatFunc::q_power(-1), RatFunc(5)},
    };
    for (const auto& [a, c] : values) {
        CAPTURE(a.to_string());
        CAPTURE(c.to_string());
        Character phi =
            Character::with_values(u, {D.simple(0), D.simple(2)}, {a, c});
        AlgElt shifted = character_shift(U, phi, f123);
        AlgElt expected = f123 + U.mul(br32, U.Ki(0, -1)) * (a * qm) +
                          U.mul(br12, U.Ki(2, -1)) * (c * qm) +
                          U.mul(U.F(1), U.mul(U.Ki(0, -1), U.Ki(2, -1))) * (a * c * qm * qm);
        CHECK(shifted == expected);
    }
}

TEST_CASE("prolonged root vector and its shift") {
    RootDatum D = RootDatum::from_name("A3");
    UqAlgebra U(D);
    AlgElt f23_long = root_vector_F(U, {2, 0, 1, 0}, 4);
    AlgElt f23 = root_vector_F(U, {2, 1}, 2);
    AlgElt br = qbracket(U, U.F(2), U.F(1), 1);
    CHECK(f23_long == f23);
    CHECK(f23 == br);

    RatFunc qm = RatFunc::q_power(-1) - RatFunc::q_power(1);
    RatFunc c = RatFunc::q_power(2) + RatFunc(3);
    WeylElt w23 = WeylElt::from_word(D, {2, 1});
    Character phi_small = Character::with_values(w23, {D.simple(2)}, {c});
    AlgElt shifted_small = character_shift(U, phi_small, f23);
    AlgElt expected = f23 + U.mul(U.F(1), U.Ki(2, -1)) * (c * qm);
    CHECK(shifted_small == expected);

    WeylElt w = WeylElt::from_word(D, {2, 0, 1, 0});
    RatFunc a = RatFunc(4);
    Character phi_full =
        Character::with_values(w, {D.simple(0), D.simple(2)}, {a, c});
    CHECK(character_shift(U, phi_full, f23_long) == expected);
}

TEST_CASE("cancellation exposes the quotient root vector") {
    RootDatum D = RootDatum::from_name("A3");
    UqAlgebra U(D);
    WeylElt u = WeylElt::from_word(D, {2, 0, 1});
    WeylElt w23 = WeylElt::from_word(D, {2, 1});
    AlgElt f123 = root_vector_F(U, {2, 0, 1}, 3);
    AlgElt f23 = root_vector_F(U, {2, 1}, 2);
    RatFunc qm = RatFunc::q_power(-1) - RatFunc::q_power(1);
    RatFunc a = RatFunc::q_power(1) + RatFunc(2);
    RatFunc c = RatFunc::frac(3, 5);

    Character phi = Character::with_values(u, {D.simple(0), D.simple(2)}, {a, c});
    AlgElt fbar123 = character_shift(U, phi, f123);
    Character phi3 = Character::with_values(w23, {D.simple(2)}, {c});
    AlgElt fbar23 = character_shift(U, phi3, f23);

    AlgElt combo = fbar123 - U.mul(fbar23, U.Ki(0, -1)) * (a * qm);
    AlgElt br12 = qbracket(U, U.F(0), U.F(1), 1);
    AlgElt expected = f123 + U.mul(br12, U.Ki(2, -1)) * (c * qm);
    CHECK(combo == expected);

    AlgElt wrong_combo = fbar123 - U.mul(fbar23, U.Ki(0, -1)) * (a * (RatFunc(0) - qm));
    CHECK(wrong_combo != expected);
}

TEST_CASE("borel generators of the second rank two family") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    WeylElt w = WeylElt::from_word(D, {0, 1});
    RatFunc lam = sl2_lambda();
    RatFunc lamp = sl2_lambda_prime(U, 0);
    RatFunc q = RatFunc::q_power(1), qi = RatFunc::q_power(-1);

    Character phim = Character::with_values(w, {D.simple(0)}, {lamp});
    ShiftContext minus(U, phim, Side::FMinus);
    AlgElt fbar1 = minus.shifted_generator(0);
    AlgElt fbar12 = minus.shifted_generator(1);
    AlgElt f12 = root_vector_F(U, {0, 1}, 2);
    CHECK(fbar1 == U.F(0) + U.Ki(0, -1) * lamp);
    CHECK(fbar12 == f12 + U.mul(U.F(1), U.Ki(0, -1)) * ((qi - q) * lamp));

    Character phip = Character::with_values(w, {D.simple(0)}, {lam});
    ShiftContext plus(U, phip, Side::EPlusAntipode);
    AlgElt ebar1 = plus.shifted_generator(0);
    AlgElt ebar12 = plus.shifted_generator(1);
    AlgElt k12inv = U.K({-1, -1});
    AlgElt e12 = root_vector_E(U, {0, 1}, 2);
    CHECK(ebar1 == U.mul(U.E(0), U.Ki(0, -1)) + U.Ki(0, -1) * lam);
    CHECK(ebar12 ==
          U.mul(e12, k12inv) + U.mul(U.E(1), k12inv) * ((RatFunc(1) - RatFunc::q_power(-2)) * lam));

    RatFunc c1 = (RatFunc(1) - RatFunc::q_power(-2)) * lam;
    RatFunc c2 = (qi - q) * lamp;
    CHECK(c1 * c2 == RatFunc(1));

    AlgElt K = U.K({1, 2});
    CHECK(U.commutator(K, ebar1).is_zero());
    CHECK(U.commutator(K, fbar1).is_zero());
    CHECK(U.mul(K, ebar12) == U.mul(ebar12, K) * RatFunc::q_power(3));
    CHECK(U.mul(K, fbar12) == U.mul(fbar12, K) * RatFunc::q_power(-3));

    CHECK(qbracket(U, ebar1, ebar12, 1).is_zero());
    CHECK(qbracket(U, ebar1, fbar12, 1).is_zero());
    CHECK(qbracket(U, fbar1, ebar12, -1).is_zero());
    CHECK(qbracket(U, fbar1, fbar12, -1).is_zero());

    RatFunc q2 = RatFunc::q_power(2), q4 = RatFunc::q_power(4);
    AlgElt weyl = qbracket(U, ebar1, fbar1, 2);
    CHECK(weyl == U.one() * (q2 / (q - qi)));

    AlgElt big = qbracket(U, ebar12, fbar12, 2);
    RatFunc top_coef = q - RatFunc::q_power(3);
    RatFunc top_const = q4 / (RatFunc(1) - q2);
    AlgElt expected = U.mul(fbar1, ebar1) * top_coef + U.one() * top_const;
    CHECK(big == expected);

    RatFunc weyl_scalar = q2 / ((q - qi) * (RatFunc(1) - q2));
    CHECK(top_coef * weyl_scalar + top_const == RatFunc(0));
}

TEST_CASE("support validation rejects bad characters") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    WeylElt w0 = WeylElt::from_word(D, {0, 1, 0});
    WeylElt s1 = WeylElt::from_word(D, {0});
    WeylElt w12 = WeylElt::from_word(D, {0, 1});

    CHECK_THROWS_AS(
        ShiftContext(U, Character::on_simples(w0, {0, 1}), Side::FMinus),
        std::invalid_argument);
    CHECK_THROWS_AS(
        ShiftContext(U, Character::on_simples(s1, {1}), Side::FMinus),
        std::invalid_argument);
    CHECK_THROWS_AS(Character::with_values(w0, {D.simple(0)}, {}),
                    std::invalid_argument);

    RootVec a12{1, 1};
    CHECK_FALSE(character_supportable(U, w0, {a12}, Side::FMinus));
    CHECK(character_supportable(U, w12, {a12}, Side::FMinus));
    CHECK(character_supportable(U, w12, {D.simple(0)}, Side::FMinus));
    CHECK(character_supportable(U, w0, {D.simple(0)}, Side::FMinus));
    CHECK(character_supportable(U, w12, {D.simple(0)}, Side::EPlusAntipode));
}

TEST_CASE("explicit shift formula for multiplicity zero prolongations") {
    RootDatum A3 = RootDatum::from_name("A3");
    UqAlgebra U(A3);
    WeylElt e(&A3);
    WeylElt s2 = WeylElt::from_word(A3, {1});

    CHECK(shift_formula_check(U, e, 1, 2) == ShiftFormulaOutcome::Holds);
    CHECK(shift_formula_check(U, e, 1, 0) == ShiftFormulaOutcome::Holds);
    CHECK(shift_formula_check(U, s2, 2, 0) == ShiftFormulaOutcome::Holds);
    CHECK(shift_formula_check(U, s2, 0, 2) == ShiftFormulaOutcome::Holds);
    CHECK(shift_formula_check(U, e, 1, 2, RatFunc::frac(3, 2)) ==
          ShiftFormulaOutcome::Holds);

    CHECK(shift_formula_check(U, e, 0, 0) == ShiftFormulaOutcome::NotApplicable);
    CHECK(shift_formula_check(U, e, 0, 2) == ShiftFormulaOutcome::NotApplicable);

    RootDatum A2 = RootDatum::from_name("A2");
    UqAlgebra U2(A2);
    WeylElt e2(&A2);
    WeylElt t2 = WeylElt::from_word(A2, {1});
    CHECK(shift_formula_check(U2, e2, 0, 1) == ShiftFormulaOutcome::Holds);
    CHECK(shift_formula_check(U2, t2, 0, 0) == ShiftFormulaOutcome::NotApplicable);
}

TEST_CASE("presentation of the rank one weyl family") {
    RootDatum D = RootDatum::from_name("A1");
    UqAlgebra U(D);
    WeylElt s1 = WeylElt::from_word(D, {0});
    RatFunc lam = RatFunc::q_power(1) + RatFunc(1);
    RatFunc lamp(3);

    BorelData data(s1);
    data.phi_minus = Character::with_values(s1, {D.simple(0)}, {lamp});
    data.w_plus = s1;
    data.phi_plus = Character::with_values(s1, {D.simple(0)}, {lam});

    CoidealPresentation pres = build_presentation(U, data);
    REQUIRE(pres.generators.size() == 2);
    CHECK(pres.generators[0] == U.F(0) + U.Ki(0, -1) * lamp);
    CHECK(pres.generators[1] == U.mul(U.E(0), U.Ki(0, -1)) + U.Ki(0, -1) * lam);
    CHECK(pres.labels[0] == "Fbar[(1)]");
    CHECK(pres.labels[1] == "Ebar[(1)]");

    CoidealCheck check = verify_coideal(U, pres);
    CHECK(check.verdict == CoidealVerdict::Yes);
}

TEST_CASE("presentation of the second rank two family") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    WeylElt w = WeylElt::from_word(D, {0, 1});
    RatFunc lamp = sl2_lambda_prime(U, 0);
    RatFunc q = RatFunc::q_power(1);
    RatFunc qi = RatFunc::q_power(-1);

    BorelData data(w);
    data.phi_minus = Character::with_values(w, {D.simple(0)}, {lamp});
    data.lattice = {RootVec{1, 2}};
    data.w_plus = w;
    data.phi_plus = Character::with_values(w, {D.simple(0)}, {RatFunc(1)});

    CoidealPresentation pres = build_presentation(U, data);
    REQUIRE(pres.generators.size() == 6);
    CHECK(pres.labels == std::vector<std::string>{"Fbar[(1,0)]", "Fbar[(1,1)]",
                                                  "K^(1,2)", "K^(-1,-2)",
                                                  "Ebar[(1,0)]", "Ebar[(1,1)]"});

    AlgElt f12 = root_vector_F(U, {0, 1}, 2);
    AlgElt e12 = root_vector_E(U, {0, 1}, 2);
    AlgElt k12inv = U.K({-1, -1});
    CHECK(pres.generators[0] == U.F(0) + U.Ki(0, -1) * lamp);
    CHECK(pres.generators[1] ==
          f12 + U.mul(U.F(1), U.Ki(0, -1)) * ((qi - q) * lamp));
    CHECK(pres.generators[2] == U.K({1, 2}));
    CHECK(pres.generators[3] == U.K({-1, -2}));
    CHECK(pres.generators[4] == U.mul(U.E(0), U.Ki(0, -1)) + U.Ki(0, -1));
    CHECK(pres.generators[5] ==
          U.mul(e12, k12inv) + U.mul(U.E(1), k12inv) * (RatFunc(1) - RatFunc::q_power(-2)));

    CoidealCheck check = verify_coideal(U, pres);
    CHECK(check.verdict == CoidealVerdict::Yes);
}

TEST_CASE("presentation of a homogeneous coideal") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    WeylElt w0 = WeylElt::from_word(D, {0, 1, 0});

    BorelData data(w0);
    data.lattice = {RootVec{1, 0}, RootVec{0, 1}};

    CoidealPresentation pres = build_presentation(U, data);
    REQUIRE(pres.generators.size() == 7);
    CHECK(pres.generators[0] == U.F(0));
    CHECK(pres.generators[1] == root_vector_F(U, {0, 1, 0}, 2));
    CHECK(pres.generators[2] == U.F(1));
    CHECK(pres.generators[3] == U.Ki(0));
    CHECK(pres.generators[4] == U.Ki(0, -1));
    CHECK(pres.generators[5] == U.Ki(1));
    CHECK(pres.generators[6] == U.Ki(1, -1));

    CoidealCheck check = verify_coideal(U, pres);
    CHECK(check.verdict == CoidealVerdict::Yes);
}

TEST_CASE("verification rejects one sided generators") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);

    CoidealPresentation just_e1;
    just_e1.generators = {U.E(0)};
    just_e1.labels = {"E1"};
    CoidealCheck c1 = verify_coideal(U, just_e1);
    CHECK(c1.verdict == CoidealVerdict::No);

    CoidealPresentation just_f12;
    just_f12.generators = {root_vector_F(U, {0, 1}, 2)};
    just_f12.labels = {"F12"};
    CoidealCheck c2 = verify_coideal(U, just_f12);
    CHECK(c2.verdict == CoidealVerdict::No);

    CoidealPresentation mixed;
    mixed.generators = {U.F(0), U.E(1)};
    mixed.labels = {"F1", "E2"};
    CoidealCheck c3 = verify_coideal(U, mixed);
    CHECK(c3.verdict == CoidealVerdict::Unknown);
}

TEST_CASE("presentation rejects a non orthogonal lattice") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    WeylElt w = WeylElt::from_word(D, {0, 1});

    BorelData data(w);
    data.phi_minus = Character::normalized(w, {D.simple(0)});
    data.lattice = {RootVec{1, 0}};
    CHECK_THROWS_AS(build_presentation(U, data), std::invalid_argument);
}
