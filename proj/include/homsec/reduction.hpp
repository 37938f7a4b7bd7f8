#pragma once

// Participant equivalence and the reduced access structure.  Two distinct
// participants a, b are equivalent when (i) no minimal set contains both
// and (ii) swapping a for b maps minimal sets to minimal sets.  For a
// k-uniform basis, condition (ii) only bites at |A| = k-1 (A u {a} can be
// minimal only then), so the check walks the basis elements containing a
// or b instead of all subsets; the naive all-subset check is kept in the
// test suite as the oracle.
//
// The relation is verified to be transitive rather than assumed; a
// counterexample raises intransitivity_detected with the witness triple.

#include <string>
#include <vector>

#include "homsec/access_structure.hpp"
#include "homsec/errors.hpp"

namespace homsec {

inline bool is_equivalent(const AccessStructure& gamma, int a, int b) {
    if (a < 1 || a > gamma.n() || b < 1 || b > gamma.n())
        throw Error(errc::out_of_range, "participant outside 1..n");
    if (a == b) return true;

    for (const ParticipantSet& s : gamma.basis())
        if (s.contains(a) && s.contains(b)) return false;  // condition (i)

    for (const ParticipantSet& s : gamma.basis()) {
        if (s.contains(a)) {
            if (!gamma.in_basis(s.without(a).with(b))) return false;
        } else if (s.contains(b)) {
            if (!gamma.in_basis(s.without(b).with(a))) return false;
        }
    }
    return true;
}

struct ReductionResult {
    // blocks sorted by smallest member, members ascending
    std::vector<std::vector<int>> classes;
    // smallest member of each block, ascending
    std::vector<int> representatives;
    // class_of[i] = 1-based block index of participant i (index 0 unused)
    std::vector<int> class_of;
    // quotient structure on {1..m}; block j maps to quotient participant j
    AccessStructure quotient;
    // no two distinct quotient participants are equivalent (expected: a
    // second reduction pass would not merge further)
    bool quotient_fully_reduced = true;
};

inline std::vector<std::vector<int>> equivalence_classes(const AccessStructure& gamma) {
    const int n = gamma.n();
    std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n) + 1,
                                       std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
            const bool eq = is_equivalent(gamma, a, b);
            rel[a][b] = eq;
            rel[b][a] = eq;
        }

    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (!rel[a][b]) continue;
            for (int c = 1; c <= n; ++c)
                if (rel[b][c] && !rel[a][c])
                    throw Error(errc::intransitivity_detected,
                                "equivalence fails transitivity on (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");
        }

    std::vector<std::vector<int>> classes;
    std::vector<bool> placed(static_cast<std::size_t>(n) + 1, false);
    for (int a = 1; a <= n; ++a) {
        if (placed[a]) continue;
        std::vector<int> block;
        for (int b = a; b <= n; ++b)
            if (rel[a][b]) {
                block.push_back(b);
                placed[b] = true;
            }
        classes.push_back(std::move(block));
    }
    return classes;
}

inline ReductionResult reduce(const AccessStructure& gamma) {
    ReductionResult result;
    result.classes = equivalence_classes(gamma);

    ParticipantSet reps;
    result.class_of.assign(static_cast<std::size_t>(gamma.n()) + 1, 0);
    for (std::size_t j = 0; j < result.classes.size(); ++j) {
        result.representatives.push_back(result.classes[j][0]);
        reps = reps.with(result.classes[j][0]);
        for (int member : result.classes[j])
            result.class_of[static_cast<std::size_t>(member)] = static_cast<int>(j) + 1;
    }

    // representatives are ascending, so induced() relabels block j to j+1
    result.quotient = induced(gamma, reps).structure;

    for (std::size_t j = 0; j < result.classes.size() && result.quotient_fully_reduced; ++j)
        for (std::size_t l = j + 1; l < result.classes.size(); ++l)
            if (is_equivalent(result.quotient, static_cast<int>(j) + 1, static_cast<int>(l) + 1)) {
                result.quotient_fully_reduced = false;
                break;
            }
    return result;
}

}  // namespace homsec
