#pragma once

// Decision pipeline for k-homogeneous structures with at least k+1
// participants:
//
//   1. check the omega(k+1) conditions; if they fail, report
//      hypotheses-not-met and make no claim either way,
//   2. reduce by participant equivalence,
//   3. threshold quotient  -> IDEAL, with a constructed scheme that is
//      verified exhaustively (vector-space test, correctness, privacy),
//   4. otherwise          -> NOT_IDEAL with an independence certificate of
//      bound <= (k-1)/k, found by replaying the proof constructions over
//      role assignments first and generic search second; when the bounded
//      search cannot deliver one, the honest answer is UNRESOLVED.

#include <optional>
#include <string>
#include <vector>

#include "homsec/access_structure.hpp"
#include "homsec/bounds.hpp"
#include "homsec/errors.hpp"
#include "homsec/linear_scheme.hpp"
#include "homsec/prime_field.hpp"
#include "homsec/reduction.hpp"

namespace homsec {

enum class ClassStatus { ideal, not_ideal, hypotheses_not_met, unresolved };

inline const char* class_status_name(ClassStatus s) {
    switch (s) {
        case ClassStatus::ideal: return "IDEAL";
        case ClassStatus::not_ideal: return "NOT_IDEAL";
        case ClassStatus::hypotheses_not_met: return "HYPOTHESES_NOT_MET";
        case ClassStatus::unresolved: return "UNRESOLVED";
    }
    return "unknown";
}

struct Classification {
    ClassStatus status = ClassStatus::unresolved;
    HypothesisReport hypotheses;
    std::optional<ReductionResult> reduction;
    std::optional<LinearScheme> scheme;                   // IDEAL evidence
    std::optional<IndependenceCertificate> certificate;   // NOT_IDEAL evidence
    SearchCaps caps;
    // n = k+1 leaves omega(k+1) with the single value w(P); the hypotheses
    // then force completeness, making the threshold question degenerate
    bool degenerate_min_size = false;
};

inline SearchCaps default_classify_caps(const AccessStructure& gamma) {
    // the proof constructions need m = k and |A| = k-1; one extra chain
    // level covers qualified-A certificates of size k
    return SearchCaps{gamma.k() + 1, gamma.k(), std::chrono::milliseconds{0}};
}

// Vector-space scheme for a structure whose quotient is threshold: each
// participant receives the Vandermonde vector of its equivalence class.
inline LinearScheme certify_ideal(const AccessStructure& gamma, std::uint64_t p) {
    const ReductionResult reduction = reduce(gamma);
    if (!reduction.quotient.is_threshold())
        throw Error(errc::not_reduced_threshold,
                    "reduced structure is not threshold; no vector-space scheme here");
    const int classes = static_cast<int>(reduction.classes.size());
    PrimeField field(p);
    VectorAssignment asg =
        build_threshold_vectors(gamma.k(), classes, field, reduction.class_of);
    LinearScheme scheme{field, std::move(asg), gamma};
    if (!is_vector_space_structure(scheme.structure, scheme.assignment, scheme.field))
        throw Error(errc::evidence_verification_failed,
                    "constructed scheme fails the vector-space test");
    return scheme;
}

inline Rational nonideal_target(const AccessStructure& gamma) {
    return Rational(gamma.k() - 1, gamma.k());
}

// All ordered tuples of `count` distinct participants, lexicographic.
template <typename Fn>
void for_each_role_tuple(int n, int count, Fn&& fn) {
    std::vector<int> roles;
    ParticipantSet used;
    const auto step = [&](const auto& self) -> bool {
        if (static_cast<int>(roles.size()) == count) return fn(roles);
        for (int i = 1; i <= n; ++i) {
            if (used.contains(i)) continue;
            roles.push_back(i);
            used = used.with(i);
            const bool keep_going = self(self);
            roles.pop_back();
            used = used.without(i);
            if (!keep_going) return false;
        }
        return true;
    };
    step(step);
}

// Certificate of bound <= (k-1)/k for a hypothesis-satisfying structure
// whose quotient is not threshold.  Throws search_exhausted when neither
// replay nor bounded generic search delivers one within the caps.
inline IndependenceCertificate certify_nonideal(const AccessStructure& gamma, SearchCaps caps) {
    if (!gamma.check_hypotheses().satisfied())
        throw Error(errc::config_invalid, "structure does not satisfy the omega hypotheses");
    if (reduce(gamma).quotient.is_threshold())
        throw Error(errc::config_invalid, "reduced structure is threshold; nothing to certify");
    if (caps.max_m < 1 || caps.max_a < 1)
        throw Error(errc::cap_exceeded, "search caps must be positive");

    const Rational target = nonideal_target(gamma);
    std::optional<IndependenceCertificate> found;

    for (ReplayTemplate shape : kAllReplayTemplates) {
        const bool needs_base = shape != ReplayTemplate::outsider_at_top &&
                                shape != ReplayTemplate::pivot_at_top;
        if (needs_base && gamma.k() < 3) continue;
        for_each_role_tuple(gamma.n(), gamma.k() + 2, [&](const std::vector<int>& roles) {
            ReplayOutcome outcome = replay_lemma_sequence(gamma, {shape, roles});
            if (outcome.certificate && outcome.certificate->bound <= target &&
                outcome.certificate->length() <= caps.max_m &&
                outcome.certificate->a_set.size() <= caps.max_a) {
                found = std::move(outcome.certificate);
                return false;  // first hit in template/tuple order wins
            }
            return true;
        });
        if (found) break;
    }

    if (!found) {
        const BoundSearchResult searched = search_bound(gamma, caps);
        if (searched.bound && searched.bound->value <= target)
            found = searched.bound->certificate;
    }

    if (!found)
        throw Error(errc::search_exhausted,
                    "no certificate of bound <= " + target.str() + " within caps");
    if (!verify_certificate(gamma, *found).accepted)
        throw Error(errc::evidence_verification_failed, "certificate failed re-verification");
    return *found;
}

inline Classification classify(const AccessStructure& gamma,
                               std::optional<SearchCaps> caps = std::nullopt) {
    if (gamma.n() < gamma.k() + 1)
        throw Error(errc::too_small, "classification needs at least k+1 participants");

    Classification result;
    result.caps = caps ? *caps : default_classify_caps(gamma);
    result.degenerate_min_size = gamma.n() == gamma.k() + 1;
    result.hypotheses = gamma.check_hypotheses();
    if (!result.hypotheses.satisfied()) {
        result.status = ClassStatus::hypotheses_not_met;
        return result;
    }

    result.reduction = reduce(gamma);
    if (result.reduction->quotient.is_threshold()) {
        const auto classes = static_cast<std::uint64_t>(result.reduction->classes.size());
        LinearScheme scheme = certify_ideal(gamma, smallest_prime_above(classes));
        if (!verify_correctness(scheme).pass)
            throw Error(errc::evidence_verification_failed, "scheme fails correctness");
        if (!verify_privacy(scheme).pass)
            throw Error(errc::evidence_verification_failed, "scheme fails privacy");
        result.scheme = std::move(scheme);
        result.status = ClassStatus::ideal;
        return result;
    }

    try {
        result.certificate = certify_nonideal(gamma, result.caps);
        result.status = ClassStatus::not_ideal;
    } catch (const Error& e) {
        if (e.code() != errc::search_exhausted) throw;
        result.status = ClassStatus::unresolved;
    }
    return result;
}

}  // namespace homsec
