#include <catch_amalgamated.hpp>

#include <vector>

#include "homsec/enumeration.hpp"
#include "homsec/reduction.hpp"

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

// oracle: the definition verbatim, all subsets A of P \ {a,b} of every size
bool naive_equivalent(const AccessStructure& g, int a, int b) {
    if (a == b) return true;
    for (const ParticipantSet& s : g.basis())
        if (s.contains(a) && s.contains(b)) return false;
    bool ok = true;
    for_each_subset(g.n(), [&](ParticipantSet candidate) {
        if (!ok || candidate.contains(a) || candidate.contains(b)) return;
        if (g.in_basis(candidate.with(a)) != g.in_basis(candidate.with(b))) ok = false;
    });
    return ok;
}

}  // namespace

TEST_CASE("equivalence on the worked examples") {
    const AccessStructure chain = chain5();
    CHECK_FALSE(is_equivalent(chain, 1, 5));
    CHECK(is_equivalent(chain, 2, 2));
    CHECK_THROWS_AS(is_equivalent(chain, 0, 3), Error);
    CHECK_THROWS_AS(is_equivalent(chain, 1, 6), Error);

    CHECK(is_equivalent(twins5(), 4, 5));

    // every pair of a complete structure shares a minimal set
    const AccessStructure complete = complete_structure(5, 3);
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) CHECK_FALSE(is_equivalent(complete, a, b));
}

TEST_CASE("basis-walk equivalence agrees with the all-subsets oracle") {
    EnumerationFilter filter;
    filter.k = 2;
    for (filter.n = 3; filter.n <= 5; ++filter.n)
        enumerate_structures(filter, [&](const AccessStructure& g) {
            for (int a = 1; a <= g.n(); ++a)
                for (int b = a; b <= g.n(); ++b)
                    CHECK(is_equivalent(g, a, b) == naive_equivalent(g, a, b));
            return true;
        });
    filter.k = 3;
    for (filter.n = 4; filter.n <= 5; ++filter.n)
        enumerate_structures(filter, [&](const AccessStructure& g) {
            for (int a = 1; a <= g.n(); ++a)
                for (int b = a; b <= g.n(); ++b)
                    CHECK(is_equivalent(g, a, b) == naive_equivalent(g, a, b));
            return true;
        });
}

TEST_CASE("equivalence classes") {
    CHECK(equivalence_classes(chain5()) ==
          std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {5}});
    CHECK(equivalence_classes(twins5()) == std::vector<std::vector<int>>{{1}, {2}, {3}, {4, 5}});
    CHECK(equivalence_classes(complete_structure(5, 3)) ==
          std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {5}});
}

TEST_CASE("reduce on the worked examples") {
    const ReductionResult twins = reduce(twins5());
    CHECK(twins.representatives == std::vector<int>{1, 2, 3, 4});
    CHECK(twins.quotient == complete_structure(4, 3));
    CHECK(twins.quotient.is_threshold());
    CHECK(twins.class_of == std::vector<int>{0, 1, 2, 3, 4, 4});
    CHECK(twins.quotient_fully_reduced);

    const ReductionResult chain = reduce(chain5());
    CHECK(chain.quotient == chain5());

    const ReductionResult complete = reduce(complete_structure(4, 2));
    CHECK(complete.quotient == complete_structure(4, 2));
}

TEST_CASE("reduction is idempotent and lifts qualification, enumerated") {
    EnumerationFilter filter;
    filter.k = 2;
    for (filter.n = 3; filter.n <= 5; ++filter.n)
        enumerate_structures(filter, [&](const AccessStructure& g) {
            const ReductionResult r = reduce(g);
            CHECK(r.quotient_fully_reduced);
            for (const auto& block : reduce(r.quotient).classes) CHECK(block.size() == 1);

            // a ~ b lifts from the basis to full qualification
            for (int a = 1; a <= g.n(); ++a)
                for (int b = a + 1; b <= g.n(); ++b) {
                    if (!is_equivalent(g, a, b)) continue;
                    for_each_subset(g.n(), [&](ParticipantSet q) {
                        if (q.contains(a) || q.contains(b)) return;
                        CHECK(g.is_qualified(q.with(a)) == g.is_qualified(q.with(b)));
                    });
                }

            CHECK(r.quotient.basis().size() <= g.basis().size());
            CHECK(r.quotient.n() == static_cast<int>(r.classes.size()));
            return true;
        });
}

TEST_CASE("quotient equals the induced structure on representatives") {
    const ReductionResult r = reduce(twins5());
    ParticipantSet reps;
    for (int rep : r.representatives) reps = reps.with(rep);
    CHECK(r.quotient == induced(twins5(), reps).structure);
}
