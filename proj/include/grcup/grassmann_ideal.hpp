#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "grcup/f2poly.hpp"

namespace grcup {

/// The distinguished parameter n = 2^{m+1} - 4. Requires m >= 2.
std::int64_t special_n(int m);

/// Inverse of special_n: set iff n + 4 is a power of two >= 8.
std::optional<int> special_m(std::int64_t n);

/// Generators g_{n+1}, g_{n+2}, g_{n+3} of the ideal J_n presenting the
/// subring Im p_n^* = Z/2[w2,w3]/J_n of H^*(G~(n,3); Z/2).
struct IdealPresentation {
    std::int64_t n = 0;
    std::array<Polynomial, 3> generators;  // degrees n+1, n+2, n+3
    bool special = false;                  // n = 2^{m+1} - 4
    int m = -1;                            // valid when special
};

/// g_r = sum over s in [ceil(r/3), floor(r/2)] of C(s, 3s-r) mod 2 times
/// w2^{3s-r} w3^{r-2s}. Requires n >= 4 and r in {n+1, n+2, n+3}.
Polynomial generator_g(std::int64_t n, std::int64_t r);

IdealPresentation ideal_generators(std::int64_t n);

/// The closed-form basis family P_0..P_m available when n = 2^{m+1} - 4.
struct FamilyBasis {
    int m = 0;
    std::vector<Polynomial> polys;  // P_i = build_P(2^i + n + 1, i, m)
};

/// P(t,i): one term (p, (t-2p)/3) per member of Delta_{m-i}, with the member
/// value shifted left by i bits; members yielding a negative or non-integer
/// q are skipped. Requires i >= 0 and t - 2(2^m - 2^i) = 0 mod 3; for i > m
/// the enumeration is empty and the zero polynomial is returned.
Polynomial build_P(std::int64_t t, int i, int m);

FamilyBasis closed_form_family(int m);  // requires m >= 2

/// P^(s,i,j): terms indexed by the patterns (v, 0, 0, 1^j, 0^i) with v a
/// Delta_{m-i-j-2} member, under q = (s-2p)/3. Requires the congruence
/// s - 2^{m+1} + 2^{i+1} = 0 mod 3; an out-of-range j yields zero.
Polynomial build_P_hat(std::int64_t s, int i, int j, int m);

/// Q(i,j,l): terms (p, q_{i,j}(p)) with q_{i,j}(p) = (3*2^j - 2^{i+1} + n + 1
/// - 2p)/3, indexed by the patterns (u, w, 1^l, 0^i) where (u, w) is a
/// Delta_{m-i-l} member whose low j-i-l bits w are not all ones. Empty (zero)
/// once l >= j-i. Requires 0 <= i < j <= m.
Polynomial build_Q(int i, int j, int l, int m);

}  // namespace grcup
