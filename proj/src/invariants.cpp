#include "grcup/invariants.hpp"

#include <stdexcept>

namespace grcup {

namespace {

void check_basis_param(std::int64_t n, const GroebnerBasis& gb) {
    if (n < 4) throw std::invalid_argument("n must be >= 4");
    if (gb.n != n) throw std::invalid_argument("basis was built for a different n");
    if (gb.polys.empty()) throw std::invalid_argument("empty basis");
}

int require_special(std::int64_t n) {
    const auto m = special_m(n);
    if (!m) throw std::invalid_argument("operation requires n = 2^{m+1} - 4");
    return *m;
}

Polynomial nf_mono(std::int64_t p, std::int64_t q, const GroebnerBasis& gb) {
    return normal_form(Polynomial{Monomial{p, q}}, gb.polys);
}

const Polynomial kOnePlusW2PlusW3{Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}};
const Polynomial kOnePlusSquares{Monomial{0, 0}, Monomial{2, 0}, Monomial{0, 2}};

}  // namespace

std::pair<std::int64_t, Monomial> cup_im_p(std::int64_t n, const GroebnerBasis& gb) {
    check_basis_param(n, gb);
    const std::int64_t cap = 3 * n;
    std::int64_t best = -1;
    Monomial witness{0, 0};
    for (std::int64_t p = 0; 2 * p <= cap; ++p) {
        for (std::int64_t q = 0; 2 * p + 3 * q <= cap; ++q) {
            if (nf_mono(p, q, gb).is_zero()) continue;
            const std::int64_t len = p + q;
            const Monomial mono{p, q};
            if (len > best || (len == best && witness < mono)) {
                best = len;
                witness = mono;
            }
        }
    }
    return {best, witness};
}

std::int64_t height_w2(std::int64_t n, const GroebnerBasis& gb) {
    check_basis_param(n, gb);
    std::int64_t h = 0;
    while (!nf_mono(h + 1, 0, gb).is_zero()) {
        ++h;
        // The quotient vanishes above degree 3n; a longer run means the basis
        // does not present the intended ideal.
        if (2 * h > 3 * n) throw std::runtime_error("height scan exceeded the dimension bound");
    }
    return h;
}

std::vector<ChiRow> chi_table(int m, const GroebnerBasis& gb) {
    const std::int64_t n = special_n(m);
    check_basis_param(n, gb);
    const std::int64_t cap = 3 * n;
    const auto block_upper = [m](int i) {
        return (std::int64_t{1} << (m + 1)) - 3 * (std::int64_t{1} << i);
    };

    std::vector<ChiRow> rows;
    for (std::int64_t chi1 = 0; chi1 <= n; ++chi1) {
        ChiRow row;
        row.chi1 = chi1;
        row.chi2 = -1;
        for (std::int64_t z = 0; 2 * chi1 + 3 * z <= cap; ++z)
            if (!nf_mono(chi1, z, gb).is_zero()) row.chi2 = z;

        int i = 0;
        while (i + 1 < m && chi1 < block_upper(i + 1)) ++i;
        row.i = i;
        row.form_a = (std::int64_t{1} << i) - 1;
        row.form_b = (std::int64_t{1} << (i + 1)) - 2;
        row.matches_a = row.chi2 == row.form_a;
        row.matches_b = row.chi2 == row.form_b;
        rows.push_back(row);
    }
    return rows;
}

std::int64_t min_alpha(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.is_zero()) throw std::invalid_argument("min_alpha requires a nonzero polynomial");
    if (gb.polys.empty()) throw std::invalid_argument("empty basis");
    const auto m = special_m(gb.n);
    const std::int64_t cutoff = m ? (std::int64_t{1} << (*m + 1)) : 3 * gb.n;
    for (std::int64_t alpha = 0; alpha <= cutoff; ++alpha) {
        if (normal_form(mul(Monomial{alpha, 0}, f), gb.polys).is_zero()) return alpha;
    }
    throw std::runtime_error("min_alpha cutoff exceeded: basis does not annihilate the input");
}

bool sw_inverse_identity(std::int64_t n, const GroebnerBasis& gb) {
    check_basis_param(n, gb);
    require_special(n);
    const Polynomial total = power(kOnePlusW2PlusW3, static_cast<std::uint64_t>(n + 4));
    return normal_form(add(total, Polynomial{Monomial{0, 0}}), gb.polys).is_zero();
}

Polynomial normal_sw_class(std::int64_t n, const GroebnerBasis& gb) {
    check_basis_param(n, gb);
    require_special(n);
    return normal_form(mul(kOnePlusSquares, kOnePlusW2PlusW3), gb.polys);
}

ImmersionReport nonimmersion_bound(std::int64_t n, const GroebnerBasis& gb) {
    const int m = require_special(n);
    ImmersionReport rep;
    rep.sw_normal = normal_sw_class(n, gb);
    rep.d_max = rep.sw_normal.max_degree().value();
    rep.nonimmersion_dim = 3 * n + rep.d_max - 1;
    if (m >= 3) {
        rep.paper_positive_bound = 6 * n - 3;
        rep.paper_nonimmersion_bound = 3 * n + 8;
    } else {
        rep.paper_positive_bound = 21;
        rep.paper_nonimmersion_bound = 17;
    }
    rep.exceeds_paper_bound = rep.nonimmersion_dim > rep.paper_nonimmersion_bound;
    return rep;
}

CupReport report(std::int64_t n) {
    if (n < 4) throw std::invalid_argument("n must be >= 4");
    const GroebnerBasis gb = reduce_basis(buchberger(ideal_generators(n)));
    return report(n, gb);
}

CupReport report(std::int64_t n, const GroebnerBasis& gb) {
    check_basis_param(n, gb);
    CupReport rep;
    rep.n = n;
    const auto m = special_m(n);
    rep.special = m.has_value();
    rep.m = m.value_or(-1);

    auto [cup, witness] = cup_im_p(n, gb);
    rep.cup_im_p = cup;
    rep.witness = witness;
    rep.height_w2 = height_w2(n, gb);

    if (m) {
        rep.cup_total_reported = rep.cup_im_p + 1;
        rep.chi_table = chi_table(*m, gb);
        rep.sw_inverse_ok = sw_inverse_identity(n, gb);
        rep.immersion = nonimmersion_bound(n, gb);
    }
    return rep;
}

std::optional<std::int64_t> conjectured_cup_total(std::int64_t n) {
    for (int m = 2; (std::int64_t{1} << (m + 1)) - 4 <= n; ++m) {
        const std::int64_t base = (std::int64_t{1} << (m + 1)) - 4;   // 2^{m+1} - 4
        const std::int64_t mid = base + (std::int64_t{1} << m) - 2;   // 2^{m+1} + 2^m - 6
        if (n <= mid) return (std::int64_t{1} << (m + 1)) - 3;
        const std::int64_t k = n - (mid + 1);  // n = 2^{m+1} + 2^m - 5 + k
        if (k <= 2) return (std::int64_t{1} << (m + 1)) - 3 + k;
    }
    return std::nullopt;
}

}  // namespace grcup
