#pragma once

// Canonical model of a k-homogeneous access structure: n participants,
// uniformity k, and the basis of minimal qualified subsets (all of size
// exactly k, so minimality is automatic).  A set Q is qualified iff it
// contains some basis element.  Values are immutable after build and all
// operations are pure.

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>
#include <vector>

#include "homsec/errors.hpp"
#include "homsec/participant_set.hpp"

namespace homsec {

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Conditions of the main characterization theorem on the value set
// omega(k+1): 1 must not occur, k must not occur, k+1 must occur.
struct HypothesisReport {
    std::set<int> omega;
    bool excludes_one = false;
    bool excludes_k = false;
    bool contains_k_plus_one = false;

    bool satisfied() const { return excludes_one && excludes_k && contains_k_plus_one; }
};

class AccessStructure {
public:
    // Validates and normalizes the basis; throws Error on violation:
    //   wrong_cardinality     a set has != k members
    //   out_of_range          a member lies outside {1..n}
    //   duplicate_minset      two equal basis sets
    //   uncovered_participant some participant is in no basis set
    //   empty_basis           no sets at all
    static AccessStructure build(int n, int k, const std::vector<ParticipantSet>& sets) {
        if (n < 1 || n > kMaxParticipants)
            throw Error(errc::out_of_range,
                        "participant count must be in 1.." + std::to_string(kMaxParticipants));
        if (k < 2 || k > n)
            throw Error(errc::invalid_size, "uniformity k must satisfy 2 <= k <= n");
        if (sets.empty()) throw Error(errc::empty_basis, "basis must be nonempty");

        const ParticipantSet universe = ParticipantSet::full(n);
        ParticipantSet covered;
        std::unordered_set<std::uint64_t> seen;
        for (const ParticipantSet& s : sets) {
            if (!s.subset_of(universe))
                throw Error(errc::out_of_range,
                            "minimal set " + s.str() + " has a member outside 1.." +
                                std::to_string(n));
            if (s.size() != k)
                throw Error(errc::wrong_cardinality,
                            "minimal set " + s.str() + " has " + std::to_string(s.size()) +
                                " members, expected " + std::to_string(k));
            if (!seen.insert(s.bits()).second)
                throw Error(errc::duplicate_minset, "duplicate minimal set " + s.str());
            covered = covered | s;
        }
        if (covered != universe) {
            const ParticipantSet missing = universe - covered;
            throw Error(errc::uncovered_participant,
                        "participants " + missing.str() + " appear in no minimal set");
        }

        AccessStructure gamma;
        gamma.n_ = n;
        gamma.k_ = k;
        gamma.basis_ = sets;
        std::sort(gamma.basis_.begin(), gamma.basis_.end(), LexLess{});
        gamma.lookup_ = std::move(seen);
        return gamma;
    }

    static AccessStructure build(int n, int k, const std::vector<std::vector<int>>& sets) {
        std::vector<ParticipantSet> converted;
        converted.reserve(sets.size());
        for (const auto& members : sets) {
            ParticipantSet s;
            for (int m : members) {
                if (m < 1 || m > kMaxParticipants)
                    throw Error(errc::out_of_range,
                                "participant " + std::to_string(m) + " outside 1.." +
                                    std::to_string(n));
                s = s.with(m);
            }
            if (static_cast<int>(members.size()) != s.size())
                throw Error(errc::wrong_cardinality,
                            "minimal set " + s.str() + " lists a member twice");
            converted.push_back(s);
        }
        return build(n, k, converted);
    }

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<ParticipantSet>& basis() const { return basis_; }
    ParticipantSet universe() const { return ParticipantSet::full(n_); }

    bool in_basis(ParticipantSet s) const { return lookup_.count(s.bits()) != 0; }

    bool is_qualified(ParticipantSet q) const {
        for (const ParticipantSet& b : basis_)
            if (b.subset_of(q)) return true;
        return false;
    }

    // w(Q): number of minimal qualified subsets contained in Q.
    int count_w(ParticipantSet q) const {
        int count = 0;
        for (const ParticipantSet& b : basis_)
            if (b.subset_of(q)) ++count;
        return count;
    }

    // Omega(m): the exact value set of w over all m-subsets, by exhaustive
    // iteration (never sampled: it feeds the theorem hypotheses).
    std::set<int> omega(int m) const {
        if (m < k_ || m > n_)
            throw Error(errc::invalid_size,
                        "omega size must satisfy k <= m <= n, got " + std::to_string(m));
        std::set<int> values;
        for_each_subset_of_size(n_, m, [&](ParticipantSet q) { values.insert(count_w(q)); });
        return values;
    }

    bool is_threshold() const {
        return static_cast<std::int64_t>(basis_.size()) == binomial(n_, k_);
    }

    HypothesisReport check_hypotheses() const {
        if (n_ < k_ + 1)
            throw Error(errc::too_small, "hypotheses need at least k+1 participants");
        HypothesisReport report;
        report.omega = omega(k_ + 1);
        report.excludes_one = report.omega.count(1) == 0;
        report.excludes_k = report.omega.count(k_) == 0;
        report.contains_k_plus_one = report.omega.count(k_ + 1) != 0;
        return report;
    }

    friend bool operator==(const AccessStructure& a, const AccessStructure& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.basis_ == b.basis_;
    }

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<ParticipantSet> basis_;
    std::unordered_set<std::uint64_t> lookup_;
};

// Restriction to a participant subset, relabeled onto {1..|P'|} with the
// relabeling map kept (original[i-1] = original id of new participant i).
struct InducedStructure {
    AccessStructure structure;
    std::vector<int> original;
};

inline InducedStructure induced(const AccessStructure& gamma, ParticipantSet keep) {
    if (!keep.subset_of(gamma.universe()))
        throw Error(errc::out_of_range, "restriction set " + keep.str() + " not within 1..n");
    if (keep.size() < gamma.k())
        throw Error(errc::too_small, "restriction needs at least k participants");

    const std::vector<int> original = keep.members();
    std::vector<int> new_label(kMaxParticipants + 1, 0);
    for (std::size_t i = 0; i < original.size(); ++i)
        new_label[static_cast<std::size_t>(original[i])] = static_cast<int>(i) + 1;

    std::vector<ParticipantSet> restricted;
    for (const ParticipantSet& b : gamma.basis()) {
        if (!b.subset_of(keep)) continue;
        ParticipantSet relabeled;
        for (int m : b.members()) relabeled = relabeled.with(new_label[static_cast<std::size_t>(m)]);
        restricted.push_back(relabeled);
    }
    if (restricted.empty())
        throw Error(errc::uncovered_participant,
                    "no minimal set survives inside " + keep.str());

    // build() re-checks coverage of every kept participant
    return InducedStructure{
        AccessStructure::build(static_cast<int>(original.size()), gamma.k(), restricted),
        original};
}

// The complete k-uniform structure on n participants (the threshold case).
inline AccessStructure complete_structure(int n, int k) {
    std::vector<ParticipantSet> sets;
    for_each_subset_of_size(n, k, [&](ParticipantSet s) { sets.push_back(s); });
    return AccessStructure::build(n, k, sets);
}

}  // namespace homsec
