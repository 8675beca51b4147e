#include "grcup/grassmann_ideal.hpp"

#include <bit>
#include <stdexcept>

#include "grcup/binexp.hpp"

namespace grcup {

std::int64_t special_n(int m) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    return (std::int64_t{1} << (m + 1)) - 4;
}

std::optional<int> special_m(std::int64_t n) {
    if (n < 4) return std::nullopt;
    const std::uint64_t v = static_cast<std::uint64_t>(n) + 4;
    if (!std::has_single_bit(v) || v < 8) return std::nullopt;  // n + 4 = 2^{m+1}, m >= 2
    return static_cast<int>(std::bit_width(v)) - 2;
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return (a + b - 1) / b;
}

bool divisible_by_3(std::int64_t x) {
    return ((x % 3) + 3) % 3 == 0;
}

}  // namespace

Polynomial generator_g(std::int64_t n, std::int64_t r) {
    if (n < 4) throw std::invalid_argument("n must be >= 4");
    if (r < n + 1 || r > n + 3)
        throw std::invalid_argument("r must be one of n+1, n+2, n+3");
    std::vector<Monomial> terms;
    for (std::int64_t s = ceil_div(r, 3); s <= r / 2; ++s) {
        if (binom_parity(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(3 * s - r)))
            terms.push_back({3 * s - r, r - 2 * s});
    }
    return Polynomial::from_terms(std::move(terms));
}

IdealPresentation ideal_generators(std::int64_t n) {
    IdealPresentation out;
    out.n = n;
    out.generators = {generator_g(n, n + 1), generator_g(n, n + 2), generator_g(n, n + 3)};
    if (auto m = special_m(n)) {
        out.special = true;
        out.m = *m;
    }
    return out;
}

Polynomial build_P(std::int64_t t, int i, int m) {
    if (m < 0 || i < 0) throw std::invalid_argument("indices must be non-negative");
    if (!divisible_by_3(t - 2 * ((std::int64_t{1} << m) - (std::int64_t{1} << i))))
        throw std::invalid_argument("t fails the mod-3 congruence for P(t,i)");
    if (i > m) return {};
    std::vector<Monomial> terms;
    for (std::uint64_t v : delta_values(static_cast<std::size_t>(m - i))) {
        const std::int64_t p = static_cast<std::int64_t>(v) << i;
        const std::int64_t num = t - 2 * p;
        if (num < 0 || num % 3 != 0) continue;
        terms.push_back({p, num / 3});
    }
    return Polynomial::from_terms(std::move(terms));
}

FamilyBasis closed_form_family(int m) {
    const std::int64_t n = special_n(m);
    FamilyBasis fam;
    fam.m = m;
    for (int i = 0; i <= m; ++i)
        fam.polys.push_back(build_P((std::int64_t{1} << i) + n + 1, i, m));
    return fam;
}

Polynomial build_P_hat(std::int64_t s, int i, int j, int m) {
    if (m < 2 || i < 0 || j < 0) throw std::invalid_argument("indices out of range");
    if (!divisible_by_3(s - (std::int64_t{1} << (m + 1)) + (std::int64_t{1} << (i + 1))))
        throw std::invalid_argument("s fails the mod-3 congruence for P^(s,i,j)");
    const int vlen = m - i - j - 2;
    if (vlen < 0) return {};
    std::vector<Monomial> terms;
    const std::int64_t ones = ((std::int64_t{1} << j) - 1) << i;
    for (std::uint64_t v : delta_values(static_cast<std::size_t>(vlen))) {
        const std::int64_t p = (static_cast<std::int64_t>(v) << (i + j + 2)) | ones;
        const std::int64_t num = s - 2 * p;
        if (num < 0 || num % 3 != 0) continue;
        terms.push_back({p, num / 3});
    }
    return Polynomial::from_terms(std::move(terms));
}

Polynomial build_Q(int i, int j, int l, int m) {
    if (!(0 <= i && i < j && j <= m)) throw std::invalid_argument("need 0 <= i < j <= m");
    if (l < 0) throw std::invalid_argument("l must be >= 0");
    const int wlen = j - i - l;
    if (wlen <= 0) return {};
    const int klen = m - i - l;
    const std::int64_t n = special_n(m);
    const std::int64_t wall = (std::int64_t{1} << wlen) - 1;
    const std::int64_t run = ((std::int64_t{1} << l) - 1) << i;
    std::vector<Monomial> terms;
    for (std::uint64_t z : delta_values(static_cast<std::size_t>(klen))) {
        if ((static_cast<std::int64_t>(z) & wall) == wall) continue;  // w = (1,...,1)
        const std::int64_t p = (static_cast<std::int64_t>(z) << (i + l)) | run;
        const std::int64_t num =
            3 * (std::int64_t{1} << j) - (std::int64_t{1} << (i + 1)) + n + 1 - 2 * p;
        if (num < 0 || num % 3 != 0) continue;
        terms.push_back({p, num / 3});
    }
    return Polynomial::from_terms(std::move(terms));
}

}  // namespace grcup
