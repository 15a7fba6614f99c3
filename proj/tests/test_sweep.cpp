#include "doctest.h"

#include "uqcas/coideal.hpp"

#include <algorithm>
#include <set>

using namespace uqcas;

namespace {

bool has_candidate(const std::vector<BorelCandidate>& cands, const WeylElt& wm,
                   const WeylElt& wp, const std::vector<RootVec>& supp,
                   const std::string& family) {
    return std::any_of(cands.begin(), cands.end(), [&](const BorelCandidate& c) {
        return c.w_minus == wm && c.w_plus == wp && c.support == supp &&
               c.family == family;
    });
}

} // namespace

TEST_CASE("full rank two sweep confirms every detected quotient") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    auto cases = graded_sweep(U, SweepOptions{});

    CHECK(cases.size() == 6);
    for (const auto& c : cases) {
        CHECK(c.report.verdict == "match");
        CHECK(c.report.growth_ok);
        CHECK(c.report.hilbert_checked);
        CHECK(c.report.hilbert_ok);
    }

    std::vector<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& c : cases) seen.emplace_back(c.report.w.word(), c.support_simples);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> expected = {
        {{0}, {0}}, {{1}, {1}}, {{0, 1}, {0}}, {{1, 0}, {1}}, {{0, 1, 0}, {0}}, {{0, 1, 0}, {1}},
    };
    CHECK(seen == expected);
}

TEST_CASE("parallel sweep returns the same cases in the same order") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    auto serial = graded_sweep(U, SweepOptions{});
    SweepOptions par;
    par.jobs = 3;
    auto threaded = graded_sweep(U, par);

    REQUIRE(serial.size() == threaded.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].report.w == threaded[i].report.w);
        CHECK(serial[i].support_simples == threaded[i].support_simples);
        CHECK(serial[i].report.w_prime == threaded[i].report.w_prime);
        CHECK(serial[i].report.verdict == threaded[i].report.verdict);
    }
}

TEST_CASE("sweep progress reporting covers every case once") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    SweepOptions opt;
    int calls = 0;
    int last_total = 0;
    opt.progress = [&](int done, int total) {
        ++calls;
        last_total = total;
        CHECK(done >= 1);
        CHECK(done <= total);
    };
    auto cases = graded_sweep(U, opt);
    CHECK(calls == static_cast<int>(cases.size()));
    CHECK(last_total == static_cast<int>(cases.size()));
}

TEST_CASE("empty supports can be swept explicitly") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    SweepOptions opt;
    opt.include_empty_support = true;
    auto cases = graded_sweep(U, opt);
    CHECK(cases.size() == 12);
    for (const auto& c : cases)
        if (c.support_simples.empty()) {
            CHECK(c.report.w_prime == c.report.w);
            CHECK(c.report.group_rank == 0);
        }
}

TEST_CASE("borel candidates in rank one") {
    RootDatum D = RootDatum::from_name("A1");
    UqAlgebra U(D);
    auto cands = borel_candidates(U);
    REQUIRE(cands.size() == 3);

    WeylElt e(&D);
    WeylElt s1 = WeylElt::from_word(D, {0});
    CHECK(has_candidate(cands, e, s1, {}, "homogeneous"));
    CHECK(has_candidate(cands, s1, e, {}, "homogeneous"));
    CHECK(has_candidate(cands, s1, s1, {D.simple(0)}, "sl2-pair"));

    for (const auto& c : cands)
        if (c.family == "sl2-pair") {
            CHECK(c.lattice.empty());
            CHECK(c.w_minus_prime == e);
        }
}

TEST_CASE("borel candidates in rank two match the known catalog") {
    RootDatum D = RootDatum::from_name("A2");
    UqAlgebra U(D);
    auto cands = borel_candidates(U);

    WeylElt e(&D);
    WeylElt s1 = WeylElt::from_word(D, {0});
    WeylElt s2 = WeylElt::from_word(D, {1});
    WeylElt s12 = WeylElt::from_word(D, {0, 1});
    WeylElt s21 = WeylElt::from_word(D, {1, 0});
    WeylElt w0 = WeylElt::from_word(D, {0, 1, 0});

    int homogeneous = 0;
    for (const auto& c : cands)
        if (c.family == "homogeneous") ++homogeneous;
    CHECK(homogeneous == 6);
    CHECK(has_candidate(cands, e, w0, {}, "homogeneous"));
    CHECK(has_candidate(cands, w0, e, {}, "homogeneous"));

    std::vector<RootVec> alpha1 = {D.simple(0)};
    CHECK(has_candidate(cands, s1, w0, alpha1, "other"));
    CHECK(has_candidate(cands, s12, s12, alpha1, "other"));
    CHECK(has_candidate(cands, w0, s1, alpha1, "other"));

    std::vector<RootVec> alpha2 = {D.simple(1)};
    CHECK(has_candidate(cands, s2, w0, alpha2, "other"));
    CHECK(has_candidate(cands, s21, s21, alpha2, "other"));
    CHECK(has_candidate(cands, w0, s2, alpha2, "other"));

    std::vector<RootVec> theta = {RootVec{1, 1}};
    CHECK(has_candidate(cands, s12, s21, theta, "other"));
    CHECK(has_candidate(cands, s21, s12, theta, "other"));

    CHECK(cands.size() == 14);

    for (const auto& c : cands) {
        if (c.support == alpha1) CHECK(c.lattice == std::vector<RootVec>{{1, 2}});
        if (c.support == alpha2) CHECK(c.lattice == std::vector<RootVec>{{2, 1}});
        for (const auto& beta : c.support)
            for (const auto& v : c.lattice) CHECK(D.bilin(beta, v) == 0);
        CHECK(c.w_minus_prime.length() + c.w_plus.length() == w0.length());
        CHECK(c.w_minus_prime.inverse() * c.w_plus == w0);
    }
}

TEST_CASE("a non graded coideal from overlapping leading terms") {
    RootDatum D = RootDatum::from_name("A3");
    UqAlgebra U(D);

    CoidealPresentation pres;
    AlgElt mixed = U.mul(U.F(0), U.K(RootVec{0, 0, -1})) +
                   U.mul(U.F(2), U.K(RootVec{-1, 0, 0}));
    pres.generators = {mixed, U.K(RootVec{0, 0, -1}), U.K(RootVec{-1, 0, 0})};
    pres.labels = {"F1K3inv+F3K1inv", "K3inv", "K1inv"};

    CoidealCheck chk = verify_coideal(U, pres);
    CHECK(chk.verdict == CoidealVerdict::Yes);
}
