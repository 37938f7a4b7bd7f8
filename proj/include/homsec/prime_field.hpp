#pragma once

// Arithmetic and small-scale linear algebra over GF(p), p prime.  Primality
// is checked by trial division (moduli here are desk-sized).  Matrices are
// dense row vectors; elimination is the workhorse for rank, span tests,
// solving and nullspaces.  A brute-force minor-rank oracle lives in the
// test suite.

#include <cstdint>
#include <optional>
#include <vector>

#include "homsec/errors.hpp"

namespace homsec {

using Felem = std::uint64_t;
using Fvec = std::vector<Felem>;
using Fmat = std::vector<Fvec>;

class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2) throw Error(errc::not_prime, std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 31))
            throw Error(errc::not_prime, "modulus too large for this tool");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw Error(errc::not_prime, std::to_string(p) + " is not prime");
    }

    std::uint64_t p() const { return p_; }

    Felem add(Felem a, Felem b) const { return (a + b) % p_; }
    Felem sub(Felem a, Felem b) const { return (a + p_ - b % p_) % p_; }
    Felem mul(Felem a, Felem b) const { return (a % p_) * (b % p_) % p_; }
    Felem neg(Felem a) const { return (p_ - a % p_) % p_; }

    Felem pow(Felem base, std::uint64_t exp) const {
        Felem result = 1;
        base %= p_;
        while (exp > 0) {
            if (exp & 1) result = mul(result, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return result;
    }

    Felem inv(Felem a) const {
        if (a % p_ == 0) throw Error(errc::dimension_mismatch, "inverse of zero");
        return pow(a, p_ - 2);
    }

    Felem dot(const Fvec& a, const Fvec& b) const {
        if (a.size() != b.size())
            throw Error(errc::dimension_mismatch, "dot of unequal lengths");
        Felem acc = 0;
        for (std::size_t i = 0; i < a.size(); ++i) acc = add(acc, mul(a[i], b[i]));
        return acc;
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

// Row-reduces in place; returns the rank.
inline int eliminate(const PrimeField& f, Fmat& m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Felem scale = f.inv(m[row][col]);
        for (std::size_t j = col; j < cols; ++j) m[row][j] = f.mul(m[row][j], scale);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Felem factor = m[r][col];
            for (std::size_t j = col; j < cols; ++j)
                m[r][j] = f.sub(m[r][j], f.mul(factor, m[row][j]));
        }
        ++row;
    }
    return static_cast<int>(row);
}

inline int rank(const PrimeField& f, Fmat m) { return eliminate(f, m); }

inline bool in_span(const PrimeField& f, const std::vector<Fvec>& vectors, const Fvec& target) {
    Fmat m(vectors.begin(), vectors.end());
    const int r = rank(f, m);
    m.assign(vectors.begin(), vectors.end());
    m.push_back(target);
    return rank(f, std::move(m)) == r;
}

// Coefficients lambda with sum(lambda_i * vectors[i]) = target, if any.
inline std::optional<Fvec> solve_combination(const PrimeField& f,
                                             const std::vector<Fvec>& vectors,
                                             const Fvec& target) {
    const std::size_t dim = target.size();
    const std::size_t count = vectors.size();
    Fmat aug(dim, Fvec(count + 1, 0));
    for (std::size_t j = 0; j < count; ++j) {
        if (vectors[j].size() != dim)
            throw Error(errc::dimension_mismatch, "solve with unequal vector lengths");
        for (std::size_t i = 0; i < dim; ++i) aug[i][j] = vectors[j][i];
    }
    for (std::size_t i = 0; i < dim; ++i) aug[i][count] = target[i];

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < count && row < dim; ++col) {
        std::size_t pivot = row;
        while (pivot < dim && aug[pivot][col] == 0) ++pivot;
        if (pivot == dim) continue;
        std::swap(aug[row], aug[pivot]);
        const Felem scale = f.inv(aug[row][col]);
        for (std::size_t j = col; j <= count; ++j) aug[row][j] = f.mul(aug[row][j], scale);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            const Felem factor = aug[r][col];
            for (std::size_t j = col; j <= count; ++j)
                aug[r][j] = f.sub(aug[r][j], f.mul(factor, aug[row][j]));
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < dim; ++r)
        if (aug[r][count] != 0) return std::nullopt;

    Fvec lambda(count, 0);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) lambda[pivot_col[r]] = aug[r][count];
    return lambda;
}

// Basis of { mu : sum(mu_i * vectors[i]) = 0 }.
inline std::vector<Fvec> combination_nullspace(const PrimeField& f,
                                               const std::vector<Fvec>& vectors) {
    if (vectors.empty()) return {};
    const std::size_t dim = vectors[0].size();
    const std::size_t count = vectors.size();
    Fmat m(dim, Fvec(count, 0));
    for (std::size_t j = 0; j < count; ++j)
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = vectors[j][i];

    std::vector<std::optional<std::size_t>> pivot_of_col(count);
    std::size_t row = 0;
    for (std::size_t col = 0; col < count && row < dim; ++col) {
        std::size_t pivot = row;
        while (pivot < dim && m[pivot][col] == 0) ++pivot;
        if (pivot == dim) continue;
        std::swap(m[row], m[pivot]);
        const Felem scale = f.inv(m[row][col]);
        for (std::size_t j = col; j < count; ++j) m[row][j] = f.mul(m[row][j], scale);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Felem factor = m[r][col];
            for (std::size_t j = col; j < count; ++j)
                m[r][j] = f.sub(m[r][j], f.mul(factor, m[row][j]));
        }
        pivot_of_col[col] = row;
        ++row;
    }

    std::vector<Fvec> basis;
    for (std::size_t free = 0; free < count; ++free) {
        if (pivot_of_col[free]) continue;
        Fvec mu(count, 0);
        mu[free] = 1;
        for (std::size_t col = 0; col < count; ++col)
            if (pivot_of_col[col]) mu[col] = f.neg(m[*pivot_of_col[col]][free]);
        basis.push_back(std::move(mu));
    }
    return basis;
}

inline std::uint64_t smallest_prime_above(std::uint64_t m) {
    for (std::uint64_t candidate = m + 1;; ++candidate) {
        bool prime = candidate >= 2;
        for (std::uint64_t d = 2; d * d <= candidate; ++d)
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        if (prime) return candidate;
    }
}

}  // namespace homsec
