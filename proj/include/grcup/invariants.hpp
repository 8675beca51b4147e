#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "grcup/f2poly.hpp"
#include "grcup/groebner.hpp"

namespace grcup {

/// Largest p+q over the grid {2p+3q <= 3n} with nonzero normal form, plus a
/// lex-greatest witness monomial. The scan is exhaustive, so every monomial
/// above the returned length is verifiably in the ideal.
std::pair<std::int64_t, Monomial> cup_im_p(std::int64_t n, const GroebnerBasis& gb);

/// Largest h with w2^h not in the ideal.
std::int64_t height_w2(std::int64_t n, const GroebnerBasis& gb);

/// One chi-table row. Two candidate closed forms for chi2 are evaluated side
/// by side on each block [U_{i+1}, U_i), U_i = 2^{m+1} - 3*2^i: form_a is
/// 2^i - 1 and form_b is 2^{i+1} - 2. The row records which one the computed
/// value agrees with.
struct ChiRow {
    std::int64_t chi1 = 0;
    std::int64_t chi2 = 0;  // -1 when no exponent qualifies
    int i = 0;
    std::int64_t form_a = 0;
    std::int64_t form_b = 0;
    bool matches_a = false;
    bool matches_b = false;
};

/// chi2 = max{z : w2^{chi1} w3^z not in the ideal, 2*chi1 + 3z <= 3n} for
/// each chi1 in [0, n]. Requires the special parameter shape n = 2^{m+1}-4.
std::vector<ChiRow> chi_table(int m, const GroebnerBasis& gb);

/// Least alpha >= 0 with w2^alpha * f in the ideal, searched incrementally.
/// Throws if the cutoff (2^{m+1} for special n, 3n otherwise) is exceeded,
/// which indicates a wrong basis.
std::int64_t min_alpha(const Polynomial& f, const GroebnerBasis& gb);

/// Checks (1 + w2 + w3)^{n+4} = 1 in the quotient ring, with the power fully
/// expanded (no degree truncation) before reduction. Special n only.
bool sw_inverse_identity(std::int64_t n, const GroebnerBasis& gb);

/// Normal form of (1 + w2^2 + w3^2)(1 + w2 + w3): the total Stiefel-Whitney
/// class of the stable normal bundle, reduced in the quotient ring. Special
/// n only.
Polynomial normal_sw_class(std::int64_t n, const GroebnerBasis& gb);

struct ImmersionReport {
    std::int64_t nonimmersion_dim = 0;  // 3n + d_max - 1, from the reduced class
    std::int64_t d_max = 0;             // top nonvanishing degree of w(nu)
    // Previously published bounds, recorded as metadata and never computed here.
    std::int64_t paper_positive_bound = 0;      // immersion exists in this dimension
    std::int64_t paper_nonimmersion_bound = 0;  // immersion fails in this dimension
    bool exceeds_paper_bound = false;           // computed bound strictly stronger
    Polynomial sw_normal;
};

/// w_d(nu) != 0 forbids immersion in codimension < d, so the bound is
/// 3n + d_max - 1 with d_max read off the reduced class. Special n only.
ImmersionReport nonimmersion_bound(std::int64_t n, const GroebnerBasis& gb);

struct CupReport {
    std::int64_t n = 0;
    bool special = false;
    int m = -1;  // valid when special
    std::int64_t cup_im_p = 0;
    Monomial witness;
    std::int64_t height_w2 = 0;
    // cup_im_p + 1; derived from the duality theorem, not recomputed. Only
    // reported for special n.
    std::optional<std::int64_t> cup_total_reported;
    std::vector<ChiRow> chi_table;             // special only
    std::optional<bool> sw_inverse_ok;         // special only
    std::optional<ImmersionReport> immersion;  // special only
};

CupReport report(std::int64_t n);
CupReport report(std::int64_t n, const GroebnerBasis& gb);

/// Piecewise conjectured value of the total cup-length, where a clause
/// applies: 2^{m+1}-3 on [2^{m+1}-4, 2^{m+1}+2^m-6], and 2^{m+1}-3+k at
/// n = 2^{m+1}+2^m-5+k for k in {0,1,2}. Parameters not covered by these two
/// clauses yield no value.
std::optional<std::int64_t> conjectured_cup_total(std::int64_t n);

}  // namespace grcup
