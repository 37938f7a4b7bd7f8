#include <catch_amalgamated.hpp>

#include <vector>

#include "homsec/classifier.hpp"
#include "homsec/enumeration.hpp"

using namespace homsec;

namespace {

AccessStructure chain5() {
    return AccessStructure::build(5, 3, std::vector<ParticipantSet>{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
}

AccessStructure twins5() {
    return AccessStructure::build(
        5, 3,
        std::vector<ParticipantSet>{
            {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}});
}

// complete triples on {1,2,3,4} plus a matching through participant 5:
// hypothesis-satisfying, already reduced, not threshold
AccessStructure matching5() {
    return AccessStructure::build(
        5, 3,
        std::vector<ParticipantSet>{
            {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("classify the complete structure as ideal") {
    const Classification verdict = classify(complete_structure(5, 3));
    CHECK(verdict.status == ClassStatus::ideal);
    REQUIRE(verdict.scheme.has_value());
    CHECK(verdict.scheme->field.p() == 7);  // smallest prime above 5 singleton classes
    CHECK(verify_correctness(*verdict.scheme).pass);
    CHECK(verify_privacy(*verdict.scheme).pass);
}

TEST_CASE("classify the twins example as ideal over GF(5)") {
    const Classification verdict = classify(twins5());
    CHECK(verdict.status == ClassStatus::ideal);
    REQUIRE(verdict.reduction.has_value());
    CHECK(verdict.reduction->classes ==
          std::vector<std::vector<int>>{{1}, {2}, {3}, {4, 5}});
    CHECK(verdict.reduction->quotient == complete_structure(4, 3));
    REQUIRE(verdict.scheme.has_value());
    CHECK(verdict.scheme->field.p() == 5);
    CHECK(verdict.scheme->assignment.of(4) == verdict.scheme->assignment.of(5));
}

TEST_CASE("classify the chain example as hypotheses-not-met") {
    const Classification verdict = classify(chain5());
    CHECK(verdict.status == ClassStatus::hypotheses_not_met);
    CHECK(verdict.hypotheses.omega == std::set<int>{0, 1, 2});
    CHECK_FALSE(verdict.scheme.has_value());
    CHECK_FALSE(verdict.certificate.has_value());
}

TEST_CASE("classify the matching example as not ideal") {
    const AccessStructure g = matching5();
    CHECK(g.check_hypotheses().satisfied());
    CHECK(g.omega(4) == std::set<int>{2, 4});

    const Classification verdict = classify(g);
    CHECK(verdict.status == ClassStatus::not_ideal);
    REQUIRE(verdict.certificate.has_value());
    CHECK(verdict.certificate->bound <= Rational(2, 3));
    CHECK(verify_certificate(g, *verdict.certificate).accepted);
}

TEST_CASE("classification is deterministic") {
    const Classification a = classify(matching5());
    const Classification b = classify(matching5());
    REQUIRE(a.certificate.has_value());
    REQUIRE(b.certificate.has_value());
    CHECK(*a.certificate == *b.certificate);
}

TEST_CASE("classify requires n >= k+1") {
    CHECK_THROWS_AS(classify(AccessStructure::build(3, 3, std::vector<ParticipantSet>{{1, 2, 3}})),
                    Error);
}

TEST_CASE("certify_ideal contract") {
    CHECK_THROWS_AS(certify_ideal(chain5(), 7), Error);   // quotient not threshold
    CHECK_THROWS_AS(certify_ideal(twins5(), 3), Error);   // p <= class count
    CHECK_THROWS_AS(certify_ideal(twins5(), 6), Error);   // not prime

    const LinearScheme scheme = certify_ideal(complete_structure(3, 2), 5);
    CHECK(scheme.assignment.of(1) == Fvec{1, 1});
    CHECK(scheme.assignment.of(2) == Fvec{1, 2});
    CHECK(scheme.assignment.of(3) == Fvec{1, 3});
}

TEST_CASE("certify_nonideal contract") {
    CHECK_THROWS_AS(certify_nonideal(twins5(), SearchCaps{4, 3}), Error);  // threshold quotient
    CHECK_THROWS_AS(certify_nonideal(chain5(), SearchCaps{4, 3}), Error);  // hypotheses fail

    // replay certificates need chains of length k
    CHECK_THROWS_AS(certify_nonideal(matching5(), SearchCaps{1, 3}), Error);

    const IndependenceCertificate cert = certify_nonideal(matching5(), SearchCaps{4, 3});
    CHECK(cert.bound <= Rational(2, 3));
    CHECK(verify_certificate(matching5(), cert).accepted);
}

TEST_CASE("theorem check at n = 4, k = 2 finds only the complete graph") {
    const TheoremCheckReport report = check_theorem(4, 2, SearchCaps{3, 2});
    CHECK(report.examined == 1);
    CHECK(report.ideal == 1);
    CHECK(report.violations.empty());
}

TEST_CASE("theorem check rejects degenerate caps") {
    CHECK_THROWS_AS(check_theorem(4, 2, SearchCaps{0, 2}), Error);
}
