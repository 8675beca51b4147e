#include "grcup/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace grcup {

namespace {

using PairKey = std::tuple<std::int64_t, std::int64_t, std::size_t, std::size_t>;

bool coprime_leading_terms(const Monomial& a, const Monomial& b) {
    return std::min(a.p, b.p) == 0 && std::min(a.q, b.q) == 0;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const BuchbergerOptions& opts) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) throw std::invalid_argument("zero ideal");

    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto consider = [&](std::size_t a, std::size_t b) {
        const Monomial& la = basis[a].leading_term();
        const Monomial& lb = basis[b].leading_term();
        if (coprime_leading_terms(la, lb)) {
            // First Buchberger criterion: the S-pair reduces to zero anyway.
            handled.insert({a, b});
            return;
        }
        const Monomial l = lcm_mono(la, lb);
        queue.insert({l.p, l.q, a, b});
    };

    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) consider(i, j);

    while (!queue.empty()) {
        const auto [lp, lq, i, j] = *queue.begin();
        queue.erase(queue.begin());

        if (opts.use_chain_criterion) {
            const Monomial l{lp, lq};
            bool skip = false;
            for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == i || k == j) continue;
                if (!mono_divides(basis[k].leading_term(), l)) continue;
                const auto ik = std::minmax(i, k);
                const auto kj = std::minmax(k, j);
                if (handled.count({ik.first, ik.second}) && handled.count({kj.first, kj.second}))
                    skip = true;
            }
            if (skip) {
                handled.insert({i, j});
                continue;
            }
        }

        handled.insert({i, j});
        const Polynomial r = normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(r);
        const std::size_t fresh = basis.size() - 1;
        for (std::size_t k = 0; k < fresh; ++k) consider(k, fresh);
    }

    GroebnerBasis out;
    out.polys = std::move(basis);
    out.provenance = Provenance::buchberger;
    return out;
}

GroebnerBasis buchberger(const IdealPresentation& ideal, const BuchbergerOptions& opts) {
    GroebnerBasis out = buchberger(std::span<const Polynomial>(ideal.generators), opts);
    out.n = ideal.n;
    return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
    std::vector<Polynomial> work;
    for (const Polynomial& g : gb.polys)
        if (!g.is_zero()) work.push_back(g);

    // Descending leading term, full term list as a deterministic tie-break.
    auto order = [](const Polynomial& a, const Polynomial& b) {
        return b.terms() < a.terms();
    };
    std::sort(work.begin(), work.end(), order);

    // Minimalize: drop anything whose leading term is strictly divisible by
    // another leading term, and collapse equal leading terms to the first
    // occurrence. Divisibility is transitive, so testing against the full
    // original list is order-independent.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < work.size(); ++i) {
        bool redundant = false;
        const Monomial& lt = work[i].leading_term();
        for (std::size_t j = 0; j < work.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& other = work[j].leading_term();
            if (other == lt ? j < i : mono_divides(other, lt)) redundant = true;
        }
        if (!redundant) minimal.push_back(work[i]);
    }

    // Interreduce to a fixpoint; leading terms are already pairwise
    // non-divisible, so only tails change.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form(minimal[i], others);
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), order);

    GroebnerBasis out;
    out.polys = std::move(minimal);
    out.provenance = gb.provenance;
    out.n = gb.n;
    return out;
}

GroebnerCheck is_groebner(std::span<const Polynomial> polys) {
    for (const Polynomial& p : polys)
        if (p.is_zero()) throw std::invalid_argument("zero polynomial in candidate basis");
    for (std::size_t j = 1; j < polys.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Polynomial r = normal_form(s_polynomial(polys[i], polys[j]), polys);
            if (!r.is_zero()) {
                GroebnerCheck bad;
                bad.ok = false;
                bad.certificate = GroebnerCertificate{i, j, std::move(r)};
                return bad;
            }
        }
    }
    return {true, std::nullopt};
}

bool contains(const GroebnerBasis& gb, const Polynomial& f) {
    return normal_form(f, gb.polys).is_zero();
}

ChainReport verify_reduction_chain(int m, int i, int j) {
    if (!(0 <= i && i < j && j <= m)) throw std::invalid_argument("need 0 <= i < j <= m");
    const FamilyBasis fam = closed_form_family(m);

    ChainReport rep;
    Polynomial cur = s_polynomial(fam.polys[i], fam.polys[j]);
    if (cur != build_Q(i, j, 0, m)) {
        rep.detail = "S-polynomial differs from Q(i,j,0)";
        rep.failed_step = 0;
        return rep;
    }
    rep.checkpoints = 1;

    for (int l = 0; l < j - i; ++l) {
        const Polynomial expected = build_Q(i, j, l + 1, m);
        if (cur.is_zero()) {
            // The chain bottomed out early; the remaining targets must be zero.
            if (!expected.is_zero()) {
                rep.detail = "chain reached zero but Q(i,j,l+1) is nonzero";
                rep.failed_step = l;
                return rep;
            }
        } else {
            const int divisor = i + l + 2;
            if (divisor > m) {
                rep.detail = "nonzero remainder but divisor index exceeds the family";
                rep.failed_step = l;
                return rep;
            }
            const ReduceStep step = reduce_once_step(cur, fam.polys[divisor]);
            const Monomial want{(std::int64_t{1} << (i + l)) - (std::int64_t{1} << i),
                                (std::int64_t{1} << j) - (std::int64_t{1} << (i + l + 1))};
            if (step.quotient != want) {
                std::ostringstream os;
                os << "quotient " << step.quotient << " differs from " << want;
                rep.detail = os.str();
                rep.failed_step = l;
                return rep;
            }
            cur = step.result;
            ++rep.reductions;
            if (cur != expected) {
                rep.detail = "remainder differs from Q(i,j,l+1)";
                rep.failed_step = l;
                return rep;
            }
        }
        ++rep.checkpoints;
    }

    if (!cur.is_zero()) {
        rep.detail = "chain did not terminate at zero";
        rep.failed_step = j - i;
        return rep;
    }
    rep.ok = true;
    return rep;
}

GroebnerBasis family_groebner_basis(int m) {
    GroebnerBasis out;
    out.polys = closed_form_family(m).polys;
    out.provenance = Provenance::family;
    out.n = special_n(m);
    return out;
}

}  // namespace grcup
