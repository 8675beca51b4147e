#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grcup/f2poly.hpp"
#include "grcup/grassmann_ideal.hpp"

namespace grcup {

enum class Provenance { buchberger, family, cache };

struct GroebnerBasis {
    std::vector<Polynomial> polys;  // nonzero
    Provenance provenance = Provenance::buchberger;
    std::int64_t n = -1;  // ideal parameter when known
};

struct BuchbergerOptions {
    // The coprime-leading-term criterion is always applied; the chain
    // criterion is optional and off by default.
    bool use_chain_criterion = false;
};

/// Classical pair-queue completion. Pairs are processed in ascending lex
/// order of their LCM (ties broken by index), which makes the output
/// independent of scheduling. Zero generators are dropped; an all-zero input
/// is rejected.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const BuchbergerOptions& opts = {});
GroebnerBasis buchberger(const IdealPresentation& ideal, const BuchbergerOptions& opts = {});

/// The unique reduced basis: minimal leading terms, every element fully
/// reduced against the others, sorted by descending leading term. Two ideals
/// are equal iff their reduced bases are identical.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

struct GroebnerCertificate {
    std::size_t i = 0;
    std::size_t j = 0;
    Polynomial remainder;  // the nonzero S-pair remainder
};

struct GroebnerCheck {
    bool ok = false;
    std::optional<GroebnerCertificate> certificate;  // set on failure
};

/// Buchberger criterion, checked over every pair without shortcuts.
GroebnerCheck is_groebner(std::span<const Polynomial> polys);

/// Ideal membership: normal form against the (verified) basis is zero.
bool contains(const GroebnerBasis& gb, const Polynomial& f);

struct ChainReport {
    bool ok = false;
    int reductions = 0;   // reduce-once applications performed
    int checkpoints = 0;  // Q-polynomial equalities verified, S-pair included
    int failed_step = -1; // l at which the replay diverged (-1 when ok)
    std::string detail;
};

/// Replays the explicit reduction chain of S(P_i, P_j) for the closed-form
/// family at level m: each step divides by P_{i+l+2}, must use the quotient
/// monomial (2^{i+l} - 2^i, 2^j - 2^{i+l+1}), and must land on Q(i,j,l+1),
/// ending at zero.
ChainReport verify_reduction_chain(int m, int i, int j);

/// The closed-form family packaged as a basis (provenance `family`).
GroebnerBasis family_groebner_basis(int m);

}  // namespace grcup
