#pragma once

// Test-side oracles, independent of the engine's computation paths.

#include <cassert>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "grcup/f2poly.hpp"

namespace grcup::testing {

// Pascal-triangle parity rows built purely from the additive recurrence
// C(n,k) = C(n-1,k-1) + C(n-1,k): row_n = row_{n-1} xor (row_{n-1} << 1).
class PascalParity {
public:
    explicit PascalParity(std::size_t rows) : words_((rows + 63) / 64 + 1), rows_(rows) {
        std::vector<std::uint64_t> cur(words_, 0);
        cur[0] = 1;
        table_.push_back(cur);
        for (std::size_t n = 1; n < rows; ++n) {
            std::vector<std::uint64_t> next(words_, 0);
            for (std::size_t w = 0; w < words_; ++w) {
                const std::uint64_t shifted =
                    (cur[w] << 1) | (w > 0 ? cur[w - 1] >> 63 : std::uint64_t{0});
                next[w] = cur[w] ^ shifted;
            }
            table_.push_back(next);
            cur = std::move(next);
        }
    }

    int at(std::size_t n, std::size_t k) const {
        if (n >= rows_) throw std::out_of_range("row out of range");
        if (k > n) return 0;
        return static_cast<int>((table_[n][k / 64] >> (k % 64)) & 1);
    }

private:
    std::size_t words_;
    std::size_t rows_;
    std::vector<std::vector<std::uint64_t>> table_;
};

// All monomials of one cohomological degree, descending lex.
inline std::vector<Monomial> degree_slice(std::int64_t degree) {
    std::vector<Monomial> out;
    for (std::int64_t q = 0; 3 * q <= degree; ++q) {
        const std::int64_t rest = degree - 3 * q;
        if (rest % 2 != 0) continue;
        out.push_back({rest / 2, q});
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
    return out;
}

inline std::map<std::int64_t, Polynomial> graded_parts(const Polynomial& f) {
    std::map<std::int64_t, std::vector<Monomial>> buckets;
    for (const Monomial& t : f.terms()) buckets[t.degree()].push_back(t);
    std::map<std::int64_t, Polynomial> out;
    for (auto& [d, terms] : buckets) out.emplace(d, Polynomial::from_terms(std::move(terms)));
    return out;
}

// GF(2) span membership of a homogeneous polynomial in the degree-d slice of
// the ideal generated by `gens`: the slice is spanned by the monomial
// multiples of the generators, and membership is decided by Gaussian
// elimination over bitmask rows. No division or normal forms involved.
inline bool slice_contains(std::span<const Polynomial> gens, const Polynomial& f) {
    if (f.is_zero()) return true;
    if (!is_homogeneous(f)) throw std::invalid_argument("slice oracle needs homogeneous input");
    const std::int64_t d = *f.max_degree();
    const std::vector<Monomial> slice = degree_slice(d);
    if (slice.size() > 64) throw std::invalid_argument("slice too wide for the bitmask oracle");

    auto to_mask = [&](const Polynomial& p) {
        std::uint64_t mask = 0;
        for (const Monomial& t : p.terms()) {
            std::size_t idx = slice.size();
            for (std::size_t k = 0; k < slice.size(); ++k)
                if (slice[k] == t) {
                    idx = k;
                    break;
                }
            assert(idx < slice.size());
            mask |= std::uint64_t{1} << idx;
        }
        return mask;
    };

    std::vector<std::uint64_t> pivots;
    auto insert_row = [&](std::uint64_t row) {
        for (std::uint64_t p : pivots) {
            const std::uint64_t lead = p & ~(p - 1);  // lowest set bit as pivot
            if (row & lead) row ^= p;
        }
        if (row != 0) pivots.push_back(row);
    };

    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (!is_homogeneous(g)) throw std::invalid_argument("generators must be homogeneous");
        const std::int64_t r = *g.max_degree();
        if (r > d) continue;
        for (const Monomial& mu : degree_slice(d - r)) insert_row(to_mask(mul(mu, g)));
    }

    std::uint64_t probe = to_mask(f);
    for (std::uint64_t p : pivots) {
        const std::uint64_t lead = p & ~(p - 1);
        if (probe & lead) probe ^= p;
    }
    return probe == 0;
}

// Membership for arbitrary polynomials in the graded ideal: every graded
// component must lie in its slice.
inline bool ideal_contains_by_linear_algebra(std::span<const Polynomial> gens,
                                             const Polynomial& f) {
    for (const auto& [d, part] : graded_parts(f))
        if (!slice_contains(gens, part)) return false;
    return true;
}

// Deterministic PRNG for property tests.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline Polynomial random_poly(std::uint64_t& state, int max_terms, std::int64_t max_p,
                              std::int64_t max_q) {
    const int count = static_cast<int>(splitmix64(state) % (max_terms + 1));
    std::vector<Monomial> terms;
    for (int k = 0; k < count; ++k) {
        const std::int64_t p = static_cast<std::int64_t>(splitmix64(state) % (max_p + 1));
        const std::int64_t q = static_cast<std::int64_t>(splitmix64(state) % (max_q + 1));
        terms.push_back({p, q});
    }
    return Polynomial::from_terms(std::move(terms));
}

inline Polynomial random_poly_max_degree(std::uint64_t& state, int max_terms,
                                         std::int64_t degree_cap) {
    std::vector<Monomial> terms;
    const int count = static_cast<int>(splitmix64(state) % (max_terms + 1));
    for (int k = 0; k < count; ++k) {
        const std::int64_t p = static_cast<std::int64_t>(splitmix64(state) % (degree_cap / 2 + 1));
        const std::int64_t rem = degree_cap - 2 * p;
        if (rem < 0) continue;
        const std::int64_t q = static_cast<std::int64_t>(splitmix64(state) % (rem / 3 + 1));
        terms.push_back({p, q});
    }
    return Polynomial::from_terms(std::move(terms));
}

}  // namespace grcup::testing
