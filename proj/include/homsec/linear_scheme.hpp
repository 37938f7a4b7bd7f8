#pragma once

// Linear secret sharing over a prime field.  A vector assignment maps the
// dealer and each participant to a nonzero vector of GF(p)^k; the
// assignment realizes an access structure when a set is qualified exactly
// if the dealer vector lies in the span of its vectors.  Dealing picks a
// uniform dealer state v with v.f(D) = secret and hands participant i the
// share v.f(i); with f(D) = (1,0,...,0) the dealer state is exactly a
// vector of Shamir polynomial coefficients.
//
// Correctness and privacy are verified exhaustively over all p^k dealer
// states, never probabilistically.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "homsec/access_structure.hpp"
#include "homsec/errors.hpp"
#include "homsec/prime_field.hpp"
#include "homsec/rational.hpp"

namespace homsec {

struct VectorAssignment {
    int dimension = 0;                  // k
    Fvec dealer;                        // f(D), nonzero
    std::vector<Fvec> participant;      // participant[i-1] = f(p_i), nonzero

    const Fvec& of(int participant_id) const {
        return participant[static_cast<std::size_t>(participant_id) - 1];
    }
};

struct LinearScheme {
    PrimeField field;
    VectorAssignment assignment;
    AccessStructure structure;
};

struct ShareTable {
    std::uint64_t p = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> secret;
    std::vector<std::pair<int, std::uint64_t>> shares;  // (participant, share), ascending
};

inline void validate_assignment(const AccessStructure& gamma, const VectorAssignment& asg,
                                const PrimeField& field) {
    if (asg.dimension != gamma.k())
        throw Error(errc::dimension_mismatch, "assignment dimension differs from k");
    const auto check = [&](const Fvec& v, const std::string& who) {
        if (static_cast<int>(v.size()) != asg.dimension)
            throw Error(errc::dimension_mismatch, who + " has wrong length");
        bool nonzero = false;
        for (Felem e : v) {
            if (e >= field.p()) throw Error(errc::dimension_mismatch, who + " not reduced mod p");
            nonzero = nonzero || e != 0;
        }
        if (!nonzero) throw Error(errc::dimension_mismatch, who + " is the zero vector");
    };
    check(asg.dealer, "dealer vector");
    if (static_cast<int>(asg.participant.size()) != gamma.n())
        throw Error(errc::dimension_mismatch, "assignment covers wrong participant count");
    for (int i = 1; i <= gamma.n(); ++i) check(asg.of(i), "vector of participant " + std::to_string(i));
}

enum class VssCheck {
    full,      // every subset of the participants (2^n span tests)
    shortcut,  // sizes k-1 and k only; equivalent for a k-uniform basis,
               // since spans grow monotonically and any spanning set
               // contains an independent spanning subset of size <= k
};

inline bool is_vector_space_structure(const AccessStructure& gamma, const VectorAssignment& asg,
                                      const PrimeField& field,
                                      VssCheck mode = VssCheck::shortcut) {
    validate_assignment(gamma, asg, field);
    const auto vectors_of = [&](ParticipantSet q) {
        std::vector<Fvec> vecs;
        for (int m : q.members()) vecs.push_back(asg.of(m));
        return vecs;
    };

    if (mode == VssCheck::full) {
        if (gamma.n() > 20)
            throw Error(errc::cap_exceeded, "full subset check capped at 20 participants");
        bool ok = true;
        for_each_subset(gamma.n(), [&](ParticipantSet q) {
            if (!ok) return;
            if (gamma.is_qualified(q) != in_span(field, vectors_of(q), asg.dealer)) ok = false;
        });
        return ok;
    }

    bool ok = true;
    for_each_subset_of_size(gamma.n(), gamma.k() - 1, [&](ParticipantSet q) {
        if (!ok) return;
        if (in_span(field, vectors_of(q), asg.dealer)) ok = false;
    });
    if (!ok) return false;
    for_each_subset_of_size(gamma.n(), gamma.k(), [&](ParticipantSet q) {
        if (!ok) return;
        if (gamma.in_basis(q) != in_span(field, vectors_of(q), asg.dealer)) ok = false;
    });
    return ok;
}

// Vandermonde assignment for a threshold quotient: class j evaluates at
// point j, every participant shares its class's vector, and the dealer
// takes (1,0,...,0) so the secret sits in the constant coefficient.
// class_of[i] = class of participant i (1-based; index 0 unused).
inline VectorAssignment build_threshold_vectors(int k, int classes, const PrimeField& field,
                                                const std::vector<int>& class_of) {
    if (field.p() <= static_cast<std::uint64_t>(classes))
        throw Error(errc::field_too_small,
                    "field of size " + std::to_string(field.p()) + " needs p > " +
                        std::to_string(classes));
    VectorAssignment asg;
    asg.dimension = k;
    asg.dealer.assign(static_cast<std::size_t>(k), 0);
    asg.dealer[0] = 1;

    std::vector<Fvec> class_vector(static_cast<std::size_t>(classes) + 1);
    for (int j = 1; j <= classes; ++j) {
        Fvec v(static_cast<std::size_t>(k));
        Felem x = static_cast<Felem>(j);
        Felem acc = 1;
        for (int d = 0; d < k; ++d) {
            v[static_cast<std::size_t>(d)] = acc;
            acc = field.mul(acc, x);
        }
        class_vector[static_cast<std::size_t>(j)] = std::move(v);
    }

    for (std::size_t i = 1; i < class_of.size(); ++i) {
        const int j = class_of[i];
        if (j < 1 || j > classes)
            throw Error(errc::out_of_range, "class index " + std::to_string(j));
        asg.participant.push_back(class_vector[static_cast<std::size_t>(j)]);
    }
    return asg;
}

inline VectorAssignment build_threshold_vectors(int k, int classes, const PrimeField& field) {
    std::vector<int> identity(static_cast<std::size_t>(classes) + 1);
    for (int i = 0; i <= classes; ++i) identity[static_cast<std::size_t>(i)] = i;
    return build_threshold_vectors(k, classes, field, identity);
}

// Uniform draw from [0, p) by rejection from the full 64-bit range.
inline std::uint64_t uniform_mod(std::mt19937_64& rng, std::uint64_t p) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % p;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % p;
}

// Shares induced by one explicit dealer state v (the verification loops
// enumerate these exhaustively).
inline std::vector<std::uint64_t> shares_from_dealer_state(const LinearScheme& scheme,
                                                           const Fvec& v) {
    std::vector<std::uint64_t> shares;
    shares.reserve(static_cast<std::size_t>(scheme.structure.n()));
    for (int i = 1; i <= scheme.structure.n(); ++i)
        shares.push_back(scheme.field.dot(v, scheme.assignment.of(i)));
    return shares;
}

// Samples v uniformly from { v : v.f(D) = secret } through a fixed affine
// parameterization: one particular solution plus seeded coefficients on a
// nullspace basis of v -> v.f(D).  For f(D) = (1,0,...,0) this reduces to
// v = (secret, r_1, ..., r_{k-1}).
inline ShareTable deal(const LinearScheme& scheme, std::uint64_t secret, std::uint64_t seed) {
    const PrimeField& f = scheme.field;
    if (secret >= f.p()) throw Error(errc::out_of_range, "secret not reduced mod p");

    std::vector<Fvec> coords;  // v.f(D) as a combination of v's entries
    for (Felem c : scheme.assignment.dealer) coords.push_back(Fvec{c});
    const auto particular = solve_combination(f, coords, Fvec{secret});
    if (!particular)
        throw Error(errc::dimension_mismatch, "dealer vector is zero");  // unreachable: validated
    const std::vector<Fvec> directions = combination_nullspace(f, coords);

    std::mt19937_64 rng(seed);
    Fvec v = *particular;
    for (const Fvec& dir : directions) {
        const Felem r = uniform_mod(rng, f.p());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(r, dir[i]));
    }

    ShareTable table;
    table.p = f.p();
    table.k = scheme.structure.k();
    table.seed = seed;
    table.secret = secret;
    const std::vector<std::uint64_t> shares = shares_from_dealer_state(scheme, v);
    for (int i = 1; i <= scheme.structure.n(); ++i)
        table.shares.emplace_back(i, shares[static_cast<std::size_t>(i) - 1]);
    return table;
}

// Recovers the secret from the shares of a qualified set: solve
// sum(lambda_a f(a)) = f(D), return sum(lambda_a s_a).  When the set
// carries redundancy, shares inconsistent with every dealer state are
// reported instead of silently projected.
inline std::uint64_t reconstruct(const LinearScheme& scheme, ParticipantSet q,
                                 const std::map<int, std::uint64_t>& shares) {
    if (!q.subset_of(scheme.structure.universe()))
        throw Error(errc::out_of_range, "set " + q.str() + " not within 1..n");
    if (!scheme.structure.is_qualified(q))
        throw Error(errc::not_qualified, q.str() + " is not a qualified set");

    const PrimeField& f = scheme.field;
    std::vector<Fvec> vecs;
    Fvec given;
    for (int m : q.members()) {
        const auto it = shares.find(m);
        if (it == shares.end())
            throw Error(errc::missing_share, "no share for participant " + std::to_string(m));
        vecs.push_back(scheme.assignment.of(m));
        given.push_back(it->second % f.p());
    }

    for (const Fvec& mu : combination_nullspace(f, vecs)) {
        Felem acc = 0;
        for (std::size_t i = 0; i < mu.size(); ++i) acc = f.add(acc, f.mul(mu[i], given[i]));
        if (acc != 0)
            throw Error(errc::inconsistent_shares,
                        "shares on " + q.str() + " match no dealer state");
    }

    const auto lambda = solve_combination(f, vecs, scheme.assignment.dealer);
    if (!lambda)
        throw Error(errc::not_qualified, q.str() + " does not span the dealer vector");
    Felem secret = 0;
    for (std::size_t i = 0; i < lambda->size(); ++i)
        secret = f.add(secret, f.mul((*lambda)[i], given[i]));
    return secret;
}

inline constexpr std::int64_t kDefaultStateCap = 1'000'000;

inline std::int64_t dealer_state_count(const LinearScheme& scheme, std::int64_t cap) {
    std::int64_t states = 1;
    for (int d = 0; d < scheme.structure.k(); ++d) {
        states *= static_cast<std::int64_t>(scheme.field.p());
        if (states > cap)
            throw Error(errc::cap_exceeded,
                        "p^k exceeds the exhaustive verification cap of " + std::to_string(cap));
    }
    return states;
}

// Iterate all v in GF(p)^k in lexicographic order.
template <typename Fn>
void for_each_dealer_state(const PrimeField& f, int k, Fn&& fn) {
    Fvec v(static_cast<std::size_t>(k), 0);
    for (;;) {
        fn(v);
        int pos = k - 1;
        while (pos >= 0) {
            if (++v[static_cast<std::size_t>(pos)] < f.p()) break;
            v[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

struct CorrectnessReport {
    bool pass = true;
    std::int64_t dealer_states = 0;
    int minimal_sets = 0;
    std::string counterexample;
};

// Every dealer state, every minimal qualified set: reconstruction returns
// the dealt secret.  The reconstruction coefficients depend only on the
// set, so they are solved once per basis element.
inline CorrectnessReport verify_correctness(const LinearScheme& scheme,
                                            std::int64_t cap = kDefaultStateCap) {
    validate_assignment(scheme.structure, scheme.assignment, scheme.field);
    CorrectnessReport report;
    report.dealer_states = dealer_state_count(scheme, cap);
    report.minimal_sets = static_cast<int>(scheme.structure.basis().size());

    const PrimeField& f = scheme.field;
    struct Prepared {
        ParticipantSet q;
        std::vector<int> members;
        Fvec lambda;
    };
    std::vector<Prepared> prepared;
    for (const ParticipantSet& q : scheme.structure.basis()) {
        std::vector<Fvec> vecs;
        for (int m : q.members()) vecs.push_back(scheme.assignment.of(m));
        const auto lambda = solve_combination(f, vecs, scheme.assignment.dealer);
        if (!lambda) {
            report.pass = false;
            report.counterexample = "minimal set " + q.str() + " cannot reconstruct at all";
            return report;
        }
        prepared.push_back({q, q.members(), *lambda});
    }

    for_each_dealer_state(f, scheme.structure.k(), [&](const Fvec& v) {
        if (!report.pass) return;
        const Felem secret = f.dot(v, scheme.assignment.dealer);
        for (const Prepared& pre : prepared) {
            Felem recovered = 0;
            for (std::size_t i = 0; i < pre.members.size(); ++i) {
                const Felem share = f.dot(v, scheme.assignment.of(pre.members[i]));
                recovered = f.add(recovered, f.mul(pre.lambda[i], share));
            }
            if (recovered != secret) {
                report.pass = false;
                report.counterexample = "set " + pre.q.str() + " recovers " +
                                        std::to_string(recovered) + " instead of " +
                                        std::to_string(secret);
                return;
            }
        }
    });
    return report;
}

struct PrivacyReport {
    bool pass = true;
    std::int64_t dealer_states = 0;
    int maximal_unqualified = 0;
    std::vector<ParticipantSet> distinguishing;
};

inline std::vector<ParticipantSet> maximal_unqualified_sets(const AccessStructure& gamma) {
    std::vector<ParticipantSet> out;
    for_each_subset(gamma.n(), [&](ParticipantSet u) {
        if (gamma.is_qualified(u)) return;
        for (int m = 1; m <= gamma.n(); ++m)
            if (!u.contains(m) && !gamma.is_qualified(u.with(m))) return;
        out.push_back(u);
    });
    return out;
}

// Perfect privacy: for each maximal unqualified set, the multiset of
// share tuples over the dealer states with v.f(D) = s is the same for
// every secret s.  Marginals of identical joints are identical, so
// subsets of maximal sets are covered (spot-checked against an
// all-subsets mode in the test suite).
inline PrivacyReport verify_privacy(const LinearScheme& scheme,
                                    std::int64_t cap = kDefaultStateCap,
                                    bool all_subsets = false) {
    validate_assignment(scheme.structure, scheme.assignment, scheme.field);
    PrivacyReport report;
    report.dealer_states = dealer_state_count(scheme, cap);

    std::vector<ParticipantSet> targets;
    if (all_subsets) {
        for_each_subset(scheme.structure.n(), [&](ParticipantSet u) {
            if (!u.empty() && !scheme.structure.is_qualified(u)) targets.push_back(u);
        });
    } else {
        targets = maximal_unqualified_sets(scheme.structure);
    }
    report.maximal_unqualified = static_cast<int>(targets.size());

    const PrimeField& f = scheme.field;
    for (const ParticipantSet& u : targets) {
        const std::vector<int> members = u.members();
        std::vector<std::map<std::vector<Felem>, std::int64_t>> histogram(
            static_cast<std::size_t>(f.p()));
        for_each_dealer_state(f, scheme.structure.k(), [&](const Fvec& v) {
            const Felem secret = f.dot(v, scheme.assignment.dealer);
            std::vector<Felem> tuple;
            tuple.reserve(members.size());
            for (int m : members) tuple.push_back(f.dot(v, scheme.assignment.of(m)));
            ++histogram[static_cast<std::size_t>(secret)][tuple];
        });
        for (std::size_t s = 1; s < histogram.size(); ++s)
            if (histogram[s] != histogram[0]) {
                report.pass = false;
                report.distinguishing.push_back(u);
                break;
            }
    }
    return report;
}

// Information rate log|S| / max_p log|K(p)| with spaces that are powers
// of the field size, so the ratio of exponents is exact.
inline Rational information_rate(int secret_exponent, const std::vector<int>& share_exponents) {
    if (secret_exponent < 1) throw Error(errc::invalid_size, "secret space must be nontrivial");
    if (share_exponents.empty())
        throw Error(errc::invalid_size, "every participant must receive a share");
    int max_share = 0;
    for (int e : share_exponents) {
        if (e < 1) throw Error(errc::invalid_size, "share space must be nontrivial");
        if (e > max_share) max_share = e;
    }
    return Rational(secret_exponent, max_share);
}

inline Rational information_rate(const LinearScheme& scheme) {
    return information_rate(1, std::vector<int>(static_cast<std::size_t>(scheme.structure.n()), 1));
}

}  // namespace homsec
