#pragma once

// Certified upper bounds on the optimal information rate via independent
// sequences.  A certificate is a strict chain B_1 c ... c B_m of
// unqualified sets together with witnesses X_1..X_m such that
//
//     B_i u X_i is qualified   and   B_{i-1} u X_i is not   (B_0 = {}),
//
// and a set A containing every witness.  It certifies
//
//     rho* <= |A| / (m+1)   if A is qualified,
//     rho* <= |A| / m       otherwise.
//
// Everything here is exact-rational; there is no floating point in this
// module.  verify_certificate is the single gate: the searcher and the
// replay constructions only ever return certificates that re-verify.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homsec/access_structure.hpp"
#include "homsec/errors.hpp"
#include "homsec/participant_set.hpp"
#include "homsec/rational.hpp"

namespace homsec {

struct IndependenceCertificate {
    std::vector<ParticipantSet> chain;      // B_1 .. B_m, strictly increasing
    std::vector<ParticipantSet> witnesses;  // X_1 .. X_m
    ParticipantSet a_set;                   // A, a superset of the witness union
    bool a_qualified = false;
    Rational bound;

    int length() const { return static_cast<int>(chain.size()); }

    friend bool operator==(const IndependenceCertificate&,
                           const IndependenceCertificate&) = default;
};

// Clauses in verification order; a verdict names the first one violated.
enum class CertClause {
    accepted,
    sets_out_of_range,
    witness_count_mismatch,
    chain_empty,
    first_set_empty,
    chain_not_strict,
    last_set_qualified,
    witness_upper_failed,   // B_i u X_i not qualified
    witness_lower_failed,   // B_{i-1} u X_i qualified
    union_not_in_a,
    a_membership_mismatch,  // stored flag disagrees with Gamma
    bound_mismatch,
};

inline const char* cert_clause_name(CertClause c) {
    switch (c) {
        case CertClause::accepted: return "accepted";
        case CertClause::sets_out_of_range: return "sets-out-of-range";
        case CertClause::witness_count_mismatch: return "witness-count-mismatch";
        case CertClause::chain_empty: return "chain-empty";
        case CertClause::first_set_empty: return "first-set-empty";
        case CertClause::chain_not_strict: return "chain-not-strict";
        case CertClause::last_set_qualified: return "last-set-qualified";
        case CertClause::witness_upper_failed: return "witness-upper-failed";
        case CertClause::witness_lower_failed: return "witness-lower-failed";
        case CertClause::union_not_in_a: return "union-not-in-A";
        case CertClause::a_membership_mismatch: return "A-membership-mismatch";
        case CertClause::bound_mismatch: return "bound-mismatch";
    }
    return "unknown";
}

struct CertVerdict {
    bool accepted = false;
    CertClause clause = CertClause::accepted;
    int index = 0;  // 1-based witness level for the per-level clauses
    std::string detail;
};

inline Rational certificate_bound_formula(int a_size, int m, bool a_qualified) {
    return Rational(a_size, a_qualified ? m + 1 : m);
}

inline CertVerdict verify_certificate(const AccessStructure& gamma,
                                      const IndependenceCertificate& cert) {
    const auto reject = [](CertClause clause, int index, std::string detail) {
        return CertVerdict{false, clause, index, std::move(detail)};
    };

    const ParticipantSet universe = gamma.universe();
    for (const ParticipantSet& b : cert.chain)
        if (!b.subset_of(universe))
            return reject(CertClause::sets_out_of_range, 0, "chain set " + b.str());
    for (const ParticipantSet& x : cert.witnesses)
        if (!x.subset_of(universe))
            return reject(CertClause::sets_out_of_range, 0, "witness set " + x.str());
    if (!cert.a_set.subset_of(universe))
        return reject(CertClause::sets_out_of_range, 0, "A " + cert.a_set.str());

    if (cert.witnesses.size() != cert.chain.size())
        return reject(CertClause::witness_count_mismatch, 0,
                      std::to_string(cert.witnesses.size()) + " witnesses for " +
                          std::to_string(cert.chain.size()) + " chain sets");
    if (cert.chain.empty()) return reject(CertClause::chain_empty, 0, "");
    if (cert.chain.front().empty()) return reject(CertClause::first_set_empty, 0, "");

    for (std::size_t i = 1; i < cert.chain.size(); ++i) {
        const ParticipantSet prev = cert.chain[i - 1];
        const ParticipantSet cur = cert.chain[i];
        if (!(prev.subset_of(cur) && prev != cur))
            return reject(CertClause::chain_not_strict, static_cast<int>(i) + 1,
                          prev.str() + " to " + cur.str());
    }

    if (gamma.is_qualified(cert.chain.back()))
        return reject(CertClause::last_set_qualified, cert.length(), cert.chain.back().str());

    ParticipantSet uni;
    for (std::size_t i = 0; i < cert.chain.size(); ++i) {
        const ParticipantSet prev = i == 0 ? ParticipantSet{} : cert.chain[i - 1];
        const ParticipantSet x = cert.witnesses[i];
        if (!gamma.is_qualified(cert.chain[i] | x))
            return reject(CertClause::witness_upper_failed, static_cast<int>(i) + 1,
                          (cert.chain[i] | x).str());
        if (gamma.is_qualified(prev | x))
            return reject(CertClause::witness_lower_failed, static_cast<int>(i) + 1,
                          (prev | x).str());
        uni = uni | x;
    }

    if (!uni.subset_of(cert.a_set))
        return reject(CertClause::union_not_in_a, 0,
                      "union " + uni.str() + " vs A " + cert.a_set.str());
    if (cert.a_qualified != gamma.is_qualified(cert.a_set))
        return reject(CertClause::a_membership_mismatch, 0, cert.a_set.str());
    if (cert.bound != certificate_bound_formula(cert.a_set.size(), cert.length(), cert.a_qualified))
        return reject(CertClause::bound_mismatch, 0, cert.bound.str());

    return CertVerdict{true, CertClause::accepted, 0, ""};
}

inline Rational certificate_bound(const AccessStructure& gamma,
                                  const IndependenceCertificate& cert) {
    const CertVerdict verdict = verify_certificate(gamma, cert);
    if (!verdict.accepted)
        throw Error(errc::unverified_certificate,
                    std::string("certificate rejected: ") + cert_clause_name(verdict.clause) +
                        (verdict.detail.empty() ? "" : " (" + verdict.detail + ")"));
    return cert.bound;
}

// A = the witness union exactly (the minimum superset of the union is the
// union itself); minimality over alternative witness choices belongs to
// the searcher.  Throws independence_violated when the chain/witness
// clauses do not hold.
inline std::pair<ParticipantSet, bool> minimize_a(const AccessStructure& gamma,
                                                  const std::vector<ParticipantSet>& chain,
                                                  const std::vector<ParticipantSet>& witnesses) {
    IndependenceCertificate probe;
    probe.chain = chain;
    probe.witnesses = witnesses;
    for (const ParticipantSet& x : witnesses) probe.a_set = probe.a_set | x;
    probe.a_qualified = gamma.is_qualified(probe.a_set);
    probe.bound = certificate_bound_formula(probe.a_set.size(), probe.length(), probe.a_qualified);
    const CertVerdict verdict = verify_certificate(gamma, probe);
    if (!verdict.accepted)
        throw Error(errc::independence_violated,
                    std::string("independence clauses fail: ") + cert_clause_name(verdict.clause) +
                        (verdict.detail.empty() ? "" : " (" + verdict.detail + ")"));
    return {probe.a_set, probe.a_qualified};
}

// Assembles a certificate from a clause-satisfying chain and witnesses.
inline IndependenceCertificate make_certificate(const AccessStructure& gamma,
                                                std::vector<ParticipantSet> chain,
                                                std::vector<ParticipantSet> witnesses) {
    IndependenceCertificate cert;
    cert.chain = std::move(chain);
    cert.witnesses = std::move(witnesses);
    for (const ParticipantSet& x : cert.witnesses) cert.a_set = cert.a_set | x;
    cert.a_qualified = gamma.is_qualified(cert.a_set);
    cert.bound = certificate_bound_formula(cert.a_set.size(), cert.length(), cert.a_qualified);
    return cert;
}

// Total tie-break order on certificates: smaller bound, then smaller |A|,
// then shorter chain, then lexicographic A, chain, witnesses.  The search
// result is the minimum under this order, independent of visit order.
inline bool better_certificate(const IndependenceCertificate& a,
                               const IndependenceCertificate& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.a_set.size() != b.a_set.size()) return a.a_set.size() < b.a_set.size();
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.a_set != b.a_set) return lex_less(a.a_set, b.a_set);
    if (a.chain != b.chain) return lex_less(a.chain, b.chain);
    if (a.witnesses != b.witnesses) return lex_less(a.witnesses, b.witnesses);
    return false;
}

struct SearchCaps {
    int max_m = 0;
    int max_a = 0;
    std::chrono::milliseconds budget{0};  // zero: unlimited
};

enum class BoundProvenance { sequence_certificate, ideal_scheme };

struct RateBound {
    Rational value;
    BoundProvenance provenance = BoundProvenance::sequence_certificate;
    std::optional<IndependenceCertificate> certificate;
};

struct BoundSearchResult {
    std::optional<RateBound> bound;  // present iff a certificate with value <= 1 was found
    std::optional<IndependenceCertificate> best;  // overall best, possibly vacuous (> 1)
    bool exhausted = true;                        // false iff the time budget expired
};

namespace detail {

struct BoundSearcher {
    const AccessStructure& gamma;
    SearchCaps caps;
    std::vector<ParticipantSet> unqualified;  // nonempty, increasing word order
    std::vector<ParticipantSet> witness_pool;  // 1 <= |X| <= k
    std::optional<IndependenceCertificate> best;
    std::vector<ParticipantSet> chain;
    std::vector<ParticipantSet> wits;
    bool timed = false;
    std::chrono::steady_clock::time_point deadline;
    bool expired = false;
    long long ticks = 0;

    explicit BoundSearcher(const AccessStructure& g, SearchCaps c) : gamma(g), caps(c) {
        for_each_subset(gamma.n(), [&](ParticipantSet s) {
            if (!s.empty() && !gamma.is_qualified(s)) unqualified.push_back(s);
            if (!s.empty() && s.size() <= gamma.k()) witness_pool.push_back(s);
        });
        if (caps.budget.count() > 0) {
            timed = true;
            deadline = std::chrono::steady_clock::now() + caps.budget;
        }
    }

    bool out_of_time() {
        if (!timed) return false;
        if (expired) return true;
        if ((++ticks & 1023) == 0 && std::chrono::steady_clock::now() > deadline) expired = true;
        return expired;
    }

    void record(ParticipantSet uni) {
        IndependenceCertificate cert;
        cert.chain = chain;
        cert.witnesses = wits;
        cert.a_set = uni;
        cert.a_qualified = gamma.is_qualified(uni);
        cert.bound = certificate_bound_formula(uni.size(), cert.length(), cert.a_qualified);
        if (!best || better_certificate(cert, *best)) best = cert;
    }

    void extend(ParticipantSet prev, ParticipantSet uni, int depth) {
        if (out_of_time()) return;
        for (const ParticipantSet& b : unqualified) {
            if (depth > 0 && !(prev.subset_of(b) && prev != b)) continue;
            for (const ParticipantSet& x : witness_pool) {
                const ParticipantSet next_uni = uni | x;
                if (next_uni.size() > caps.max_a) continue;
                if (!gamma.is_qualified(b | x)) continue;
                if (gamma.is_qualified(prev | x)) continue;

                chain.push_back(b);
                wits.push_back(x);
                record(next_uni);
                if (depth + 1 < caps.max_m && keep_extending(next_uni))
                    extend(b, next_uni, depth + 1);
                chain.pop_back();
                wits.pop_back();
                if (out_of_time()) return;
            }
        }
    }

    // Any completion has bound >= |union| / (max_m + 1); prune branches
    // that are strictly worse than the incumbent.
    bool keep_extending(ParticipantSet uni) const {
        if (!best) return true;
        return Rational(uni.size(), caps.max_m + 1) <= best->bound;
    }
};

}  // namespace detail

// Exhaustive backtracking over chains and witness assignments within the
// caps.  Witnesses are restricted to size <= k: a witness only needs to
// complete a chain set to a superset of one basis element, and for every
// certificate with bound below one an oversized witness can be shrunk to
// such a completion without worsening the bound (cross-checked against an
// unrestricted search in the test suite).
inline BoundSearchResult search_bound(const AccessStructure& gamma, SearchCaps caps) {
    if (caps.max_m < 1 || caps.max_a < 1)
        throw Error(errc::cap_exceeded, "search caps must be positive");
    detail::BoundSearcher searcher(gamma, caps);
    searcher.extend(ParticipantSet{}, ParticipantSet{}, 0);

    BoundSearchResult result;
    result.exhausted = !searcher.expired;
    result.best = searcher.best;
    if (searcher.best && searcher.best->bound <= Rational(1)) {
        result.bound = RateBound{searcher.best->bound, BoundProvenance::sequence_certificate,
                                 searcher.best};
    }
    return result;
}

// ---------------------------------------------------------------------------
// Replay of the five explicit chain constructions used by the
// characterization proofs.  Each template takes an ordered tuple of k+2
// distinct participants and produces the exact chain, witnesses and A of
// the corresponding construction; the certificate is returned only when
// it passes verify_certificate (i.e. when the construction's membership
// side-conditions actually hold in Gamma).  Index ranges that degenerate
// for small k are treated as empty.
// ---------------------------------------------------------------------------

enum class ReplayTemplate {
    // roles: pivot_a, pivot_b, ring_1..ring_{k-1}, outsider
    outsider_at_top,  // chain grows pivot_a through the ring, absorbs the outsider last
    pivot_at_top,     // chain grows through the ring, absorbs pivot_b last
    // roles: anchor_1, anchor_2, ring_1..ring_{k-2}, spare, outsider      (k >= 3)
    outsider_at_base,  // outsider joins at level 2; the anchor pair recurs in witnesses
    // roles: pick, alt, mid_1..mid_{k-3}, tail_1, tail_2, outsider        (k >= 3)
    outsider_at_base_skip_tail,  // chain skips tail_1; the tail pair recurs in witnesses
    // roles: ring_1..ring_{k-2}, tail_1, tail_2, outsider_base, outsider_top   (k >= 3)
    two_outsiders,  // outsiders join at level 2 and at the top
};

inline const char* replay_template_name(ReplayTemplate t) {
    switch (t) {
        case ReplayTemplate::outsider_at_top: return "outsider-at-top";
        case ReplayTemplate::pivot_at_top: return "pivot-at-top";
        case ReplayTemplate::outsider_at_base: return "outsider-at-base";
        case ReplayTemplate::outsider_at_base_skip_tail: return "outsider-at-base-skip-tail";
        case ReplayTemplate::two_outsiders: return "two-outsiders";
    }
    return "unknown";
}

inline const ReplayTemplate kAllReplayTemplates[] = {
    ReplayTemplate::outsider_at_top,
    ReplayTemplate::pivot_at_top,
    ReplayTemplate::outsider_at_base,
    ReplayTemplate::outsider_at_base_skip_tail,
    ReplayTemplate::two_outsiders,
};

struct ReplayConfig {
    ReplayTemplate shape = ReplayTemplate::outsider_at_top;
    std::vector<int> roles;  // k+2 distinct participants, read positionally
};

struct ReplayOutcome {
    std::optional<IndependenceCertificate> certificate;
    CertVerdict verdict;
};

namespace detail {

// set of roles[lo-1 .. hi-1] (1-based, inclusive); empty when lo > hi
inline ParticipantSet role_range(const std::vector<int>& r, int lo, int hi) {
    ParticipantSet s;
    for (int i = lo; i <= hi; ++i) s = s.with(r[static_cast<std::size_t>(i) - 1]);
    return s;
}

}  // namespace detail

inline ReplayOutcome replay_lemma_sequence(const AccessStructure& gamma,
                                           const ReplayConfig& config) {
    const int k = gamma.k();
    const auto& roles = config.roles;
    if (static_cast<int>(roles.size()) != k + 2)
        throw Error(errc::config_invalid,
                    "template needs " + std::to_string(k + 2) + " roles, got " +
                        std::to_string(roles.size()));
    ParticipantSet seen;
    for (int r : roles) {
        if (r < 1 || r > gamma.n())
            throw Error(errc::config_invalid, "role participant " + std::to_string(r) +
                                                  " outside 1.." + std::to_string(gamma.n()));
        if (seen.contains(r)) throw Error(errc::config_invalid, "duplicate role participant");
        seen = seen.with(r);
    }
    const bool needs_base = config.shape == ReplayTemplate::outsider_at_base ||
                            config.shape == ReplayTemplate::outsider_at_base_skip_tail ||
                            config.shape == ReplayTemplate::two_outsiders;
    if (needs_base && k < 3)
        throw Error(errc::config_invalid,
                    std::string(replay_template_name(config.shape)) + " needs k >= 3");

    using detail::role_range;
    const auto role = [&](int i) { return roles[static_cast<std::size_t>(i) - 1]; };

    std::vector<ParticipantSet> chain(static_cast<std::size_t>(k));
    std::vector<ParticipantSet> wits(static_cast<std::size_t>(k));

    switch (config.shape) {
        case ReplayTemplate::outsider_at_top: {
            // roles: 1 pivot_a, 2 pivot_b, 3..k+1 ring_1..ring_{k-1}, k+2 outsider
            const int ring = 2;  // ring_i = role(ring + i)
            for (int t = 1; t <= k - 1; ++t)
                chain[t - 1] = ParticipantSet{role(1)} | role_range(roles, ring + 1, ring + t - 1);
            chain[k - 1] = chain[k - 2].with(role(k + 2));
            for (int t = 1; t <= k; ++t) {
                if (t <= k - 2)
                    wits[t - 1] = ParticipantSet{role(2), role(ring + k - 1)} |
                                  role_range(roles, ring + t, ring + k - 3);
                else if (t == k - 1)
                    wits[t - 1] = ParticipantSet{role(2)};
                else
                    wits[t - 1] = ParticipantSet{role(ring + k - 1)};
            }
            break;
        }
        case ReplayTemplate::pivot_at_top: {
            const int ring = 2;
            for (int t = 1; t <= k - 1; ++t)
                chain[t - 1] = role_range(roles, ring + 1, ring + t);
            chain[k - 1] = chain[k - 2].with(role(2));
            for (int t = 1; t <= k; ++t) {
                if (t <= k - 2)
                    wits[t - 1] = ParticipantSet{role(1), role(k + 2)} |
                                  role_range(roles, ring + t + 1, ring + k - 2);
                else if (t == k - 1)
                    wits[t - 1] = ParticipantSet{role(k + 2)};
                else
                    wits[t - 1] = ParticipantSet{role(1)};
            }
            break;
        }
        case ReplayTemplate::outsider_at_base: {
            // roles: 1 anchor_1, 2 anchor_2, 3..k ring_1..ring_{k-2},
            //        k+1 spare, k+2 outsider
            const int ring = 2;
            chain[0] = ParticipantSet{role(ring + k - 2)};
            for (int t = 2; t <= k - 1; ++t)
                chain[t - 1] =
                    role_range(roles, ring + k - t, ring + k - 2).with(role(k + 2));
            chain[k - 1] =
                (ParticipantSet{role(2)} | role_range(roles, ring + 1, ring + k - 2))
                    .with(role(k + 2));
            for (int t = 1; t <= k; ++t) {
                if (t <= k - 3)
                    wits[t - 1] = ParticipantSet{role(1), role(2), role(k + 1)} |
                                  role_range(roles, ring + 2, ring + k - 2 - t);
                else if (t == k - 2)
                    wits[t - 1] = ParticipantSet{role(1), role(2)};
                else if (t == k - 1)
                    wits[t - 1] = ParticipantSet{role(k + 1)};
                else
                    wits[t - 1] = ParticipantSet{role(1)};
            }
            break;
        }
        case ReplayTemplate::outsider_at_base_skip_tail: {
            // roles: 1 pick, 2 alt, 3..k-1 mid_1..mid_{k-3},
            //        k tail_1, k+1 tail_2, k+2 outsider
            const int mid = 2;  // mid_i = role(mid + i)
            chain[0] = ParticipantSet{role(1)};
            for (int t = 2; t <= k - 1; ++t)
                chain[t - 1] =
                    (ParticipantSet{role(1)} | role_range(roles, mid + 1, mid + t - 2))
                        .with(role(k + 2));
            chain[k - 1] = (ParticipantSet{role(1)} | role_range(roles, mid + 1, mid + k - 3))
                               .with(role(k + 1))
                               .with(role(k + 2));
            for (int t = 1; t <= k; ++t) {
                if (t <= k - 3)
                    wits[t - 1] = ParticipantSet{role(2), role(k), role(k + 1)} |
                                  role_range(roles, mid + t + 1, mid + k - 3);
                else if (t == k - 2)
                    wits[t - 1] = ParticipantSet{role(k), role(k + 1)};
                else if (t == k - 1)
                    wits[t - 1] = ParticipantSet{role(2)};
                else
                    wits[t - 1] = ParticipantSet{role(k)};
            }
            break;
        }
        case ReplayTemplate::two_outsiders: {
            // roles: 1..k-2 ring_1..ring_{k-2}, k-1 tail_1, k tail_2,
            //        k+1 outsider_base, k+2 outsider_top
            chain[0] = ParticipantSet{role(1)};
            for (int t = 2; t <= k - 1; ++t)
                chain[t - 1] = role_range(roles, 1, t - 1).with(role(k + 1));
            chain[k - 1] = role_range(roles, 1, k - 2).with(role(k + 1)).with(role(k + 2));
            for (int t = 1; t <= k; ++t) {
                if (t == 1)
                    wits[0] = role_range(roles, 2, k - 2) | ParticipantSet{role(k - 1), role(k)};
                else if (t <= k - 2)
                    wits[t - 1] = role_range(roles, t, k - 2).with(role(k - 1));
                else if (t == k - 1)
                    wits[t - 1] = ParticipantSet{role(k - 1)};
                else
                    wits[t - 1] = ParticipantSet{role(k)};
            }
            break;
        }
    }

    IndependenceCertificate cert = make_certificate(gamma, std::move(chain), std::move(wits));
    const CertVerdict verdict = verify_certificate(gamma, cert);
    ReplayOutcome outcome;
    outcome.verdict = verdict;
    if (verdict.accepted) outcome.certificate = std::move(cert);
    return outcome;
}

// Pushes a certificate on a reduced structure back to the original by
// substituting each quotient participant with its class representative.
// The lift preserves the bound; callers re-verify against the original.
inline IndependenceCertificate lift_certificate(const IndependenceCertificate& cert,
                                                const std::vector<int>& representatives) {
    const auto lift_set = [&](ParticipantSet s) {
        ParticipantSet out;
        for (int m : s.members())
            out = out.with(representatives[static_cast<std::size_t>(m) - 1]);
        return out;
    };
    IndependenceCertificate lifted;
    for (const ParticipantSet& b : cert.chain) lifted.chain.push_back(lift_set(b));
    for (const ParticipantSet& x : cert.witnesses) lifted.witnesses.push_back(lift_set(x));
    lifted.a_set = lift_set(cert.a_set);
    lifted.a_qualified = cert.a_qualified;
    lifted.bound = cert.bound;
    return lifted;
}

}  // namespace homsec
