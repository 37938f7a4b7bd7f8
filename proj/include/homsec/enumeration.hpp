#pragma once

// Exhaustive generation of small k-homogeneous structures and the
// empirical theorem sweep.  Candidates are subsets of the C(n,k) possible
// hyperedges; filters run in a fixed pipeline (coverage, hypotheses,
// isomorphism dedup) and the stream order is the numeric order of the
// edge-subset masks, so identical filters always produce the identical
// sequence.
//
// Isomorphism dedup keeps exactly the structures that equal their own
// canonical form: the lexicographically least basis over all n!
// relabelings.  Explicit permutation minimum is affordable at n <= 8 and
// carries no correctness risk.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "homsec/access_structure.hpp"
#include "homsec/classifier.hpp"
#include "homsec/errors.hpp"
#include "homsec/parallel.hpp"
#include "homsec/participant_set.hpp"

namespace homsec {

struct EnumerationFilter {
    int n = 0;
    int k = 0;
    // When false, invalid candidates are rejected by build() instead of the
    // generation-time coverage test; the yielded stream is identical.
    bool require_coverage = true;
    bool require_hypotheses = false;
    bool dedup_iso = false;
};

inline constexpr int kMaxEnumerationEdges = 24;  // raw space is 2^edges
inline constexpr int kMaxCanonicalN = 8;         // canonical form walks n! relabelings

inline void validate_filter(const EnumerationFilter& f) {
    if (f.n < 2 || f.n > kMaxCanonicalN)
        throw Error(errc::cap_exceeded, "enumeration supports 2 <= n <= 8");
    if (f.k < 2 || f.k > f.n)
        throw Error(errc::cap_exceeded, "enumeration needs 2 <= k <= n");
    if (binomial(f.n, f.k) > kMaxEnumerationEdges)
        throw Error(errc::cap_exceeded,
                    "C(n,k) = " + std::to_string(binomial(f.n, f.k)) + " candidate edges exceed " +
                        std::to_string(kMaxEnumerationEdges));
    if (f.require_hypotheses && f.n < f.k + 1)
        throw Error(errc::too_small, "hypothesis filter needs n >= k+1");
}

inline std::vector<ParticipantSet> relabeled_basis(const std::vector<ParticipantSet>& basis,
                                                   const std::vector<int>& perm) {
    std::vector<ParticipantSet> out;
    out.reserve(basis.size());
    for (const ParticipantSet& b : basis) {
        ParticipantSet s;
        for (int m : b.members()) s = s.with(perm[static_cast<std::size_t>(m) - 1]);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

inline std::vector<ParticipantSet> canonical_form(const AccessStructure& gamma) {
    if (gamma.n() > kMaxCanonicalN)
        throw Error(errc::cap_exceeded, "canonical form capped at n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(gamma.n()));
    for (int i = 0; i < gamma.n(); ++i) perm[static_cast<std::size_t>(i)] = i + 1;

    std::vector<ParticipantSet> best = gamma.basis();
    do {
        std::vector<ParticipantSet> candidate = relabeled_basis(gamma.basis(), perm);
        if (lex_less(candidate, best)) best = std::move(candidate);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Yields each surviving structure once; fn may return false to stop early.
template <typename Fn>
void enumerate_structures(const EnumerationFilter& filter, Fn&& fn) {
    validate_filter(filter);

    std::vector<ParticipantSet> edges;
    for_each_subset_of_size(filter.n, filter.k, [&](ParticipantSet e) { edges.push_back(e); });
    const int edge_count = static_cast<int>(edges.size());
    const std::uint64_t full = ParticipantSet::full(filter.n).bits();

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << edge_count); ++mask) {
        std::uint64_t covered = 0;
        std::vector<ParticipantSet> basis;
        for (int e = 0; e < edge_count; ++e)
            if (mask & (std::uint64_t{1} << e)) {
                covered |= edges[static_cast<std::size_t>(e)].bits();
                basis.push_back(edges[static_cast<std::size_t>(e)]);
            }
        if (filter.require_coverage && covered != full) continue;

        AccessStructure gamma;
        try {
            gamma = AccessStructure::build(filter.n, filter.k, basis);
        } catch (const Error&) {
            continue;  // only reachable with require_coverage off
        }
        if (filter.require_hypotheses && !gamma.check_hypotheses().satisfied()) continue;
        if (filter.dedup_iso && gamma.basis() != canonical_form(gamma)) continue;
        if (!fn(gamma)) return;
    }
}

struct TheoremViolation {
    AccessStructure structure;
    std::string reason;
};

struct TheoremCheckReport {
    std::int64_t examined = 0;
    std::int64_t ideal = 0;
    std::int64_t not_ideal = 0;
    std::int64_t unresolved = 0;
    std::vector<TheoremViolation> violations;
    std::chrono::milliseconds wall{0};
};

// Classifies every hypothesis-satisfying structure at (n, k) and records a
// violation for: an UNRESOLVED outcome, IDEAL evidence failing scheme
// verification, or NOT_IDEAL evidence failing re-verification or
// exceeding (k-1)/k.  An empty violation list is the empirical stand-in
// for the characterization theorem at this size.
inline TheoremCheckReport check_theorem(int n, int k, SearchCaps caps, bool dedup = false) {
    if (caps.max_m < 1 || caps.max_a < 1)
        throw Error(errc::cap_exceeded, "search caps must be positive");
    const auto started = std::chrono::steady_clock::now();

    EnumerationFilter filter;
    filter.n = n;
    filter.k = k;
    filter.require_hypotheses = true;
    filter.dedup_iso = dedup;

    std::vector<AccessStructure> batch;
    enumerate_structures(filter, [&](const AccessStructure& gamma) {
        batch.push_back(gamma);
        return true;
    });

    struct Outcome {
        ClassStatus status = ClassStatus::unresolved;
        bool threw = false;
        std::string violation;  // empty when consistent
    };
    std::vector<Outcome> outcomes(batch.size());
    const Rational target(k - 1, k);

    parallel_for_index(batch.size(), [&](std::size_t i) {
        const AccessStructure& gamma = batch[i];
        Outcome& out = outcomes[i];
        try {
            const Classification verdict = classify(gamma, caps);
            out.status = verdict.status;
            if (verdict.status == ClassStatus::unresolved) {
                out.violation = "bounded search exhausted without a certificate";
            } else if (verdict.status == ClassStatus::not_ideal) {
                if (!verdict.certificate ||
                    !verify_certificate(gamma, *verdict.certificate).accepted)
                    out.violation = "certificate failed re-verification";
                else if (verdict.certificate->bound > target)
                    out.violation = "certificate bound exceeds " + target.str();
            } else if (verdict.status == ClassStatus::ideal) {
                if (!verdict.scheme)
                    out.violation = "ideal verdict without a scheme";
            }
        } catch (const Error& e) {
            out.threw = true;
            out.violation = std::string(errc_name(e.code())) + ": " + e.what();
        }
    });

    TheoremCheckReport report;
    report.examined = static_cast<std::int64_t>(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        if (!outcomes[i].threw) switch (outcomes[i].status) {
                case ClassStatus::ideal: ++report.ideal; break;
                case ClassStatus::not_ideal: ++report.not_ideal; break;
                case ClassStatus::unresolved: ++report.unresolved; break;
                case ClassStatus::hypotheses_not_met: break;  // filtered out upstream
            }
        if (!outcomes[i].violation.empty())
            report.violations.push_back({batch[i], outcomes[i].violation});
    }
    report.wall = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    return report;
}

}  // namespace homsec
