#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grcup {

/// Exponent pair (p, q) standing for w2^p * w3^q.
///
/// The default three-way comparison is the lexicographic term order with p
/// dominant: (p,q) > (r,s) iff p > r, or p = r and q > s. This is the one
/// term order used throughout the engine.
struct Monomial {
    std::int64_t p = 0;
    std::int64_t q = 0;

    /// Cohomological degree: w2 sits in degree 2, w3 in degree 3.
    constexpr std::int64_t degree() const noexcept { return 2 * p + 3 * q; }

    friend constexpr bool operator==(const Monomial&, const Monomial&) noexcept = default;
    friend constexpr auto operator<=>(const Monomial&, const Monomial&) noexcept = default;
};

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b) noexcept;

/// True iff d divides m componentwise.
bool mono_divides(const Monomial& d, const Monomial& m) noexcept;

/// Exponent sum. Throws std::overflow_error instead of wrapping.
Monomial mono_mul(const Monomial& a, const Monomial& b);

/// Exponent difference; requires mono_divides(den, num).
Monomial mono_div(const Monomial& num, const Monomial& den);

/// Componentwise maximum.
Monomial lcm_mono(const Monomial& a, const Monomial& b) noexcept;

class Polynomial;
namespace detail {
Polynomial make_sorted_poly(std::vector<Monomial>&& sorted);
}

/// A polynomial over GF(2) in w2, w3: a finite set of monomials. Presence of
/// a monomial means coefficient 1; the empty set is the zero polynomial.
/// Terms are kept in strictly descending lex order, so the leading term is
/// always the first entry and serialization is canonical.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Monomial> terms);

    /// Builds a polynomial from an arbitrary term list with GF(2)
    /// accumulation: monomials occurring an even number of times cancel.
    static Polynomial from_terms(std::vector<Monomial> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }

    /// Lex-maximal term. Throws std::domain_error("no leading term") on zero.
    const Monomial& leading_term() const;

    /// Largest cohomological degree among the terms; empty for zero.
    std::optional<std::int64_t> max_degree() const noexcept;

    bool contains_term(const Monomial& m) const noexcept;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    explicit Polynomial(std::vector<Monomial> sorted) : terms_(std::move(sorted)) {}
    friend Polynomial detail::make_sorted_poly(std::vector<Monomial>&&);

    std::vector<Monomial> terms_;
};

/// Symmetric difference of the term sets (addition in characteristic 2).
Polynomial add(const Polynomial& f, const Polynomial& g);

/// Product with GF(2) cancellation. Terms above `degree_cap` (cohomological)
/// are dropped when a cap is supplied.
Polynomial mul(const Polynomial& f, const Polynomial& g,
               std::optional<std::int64_t> degree_cap = std::nullopt);

/// Monomial shift of every term.
Polynomial mul(const Monomial& m, const Polynomial& f);

Polynomial power(const Polynomial& f, std::uint64_t e,
                 std::optional<std::int64_t> degree_cap = std::nullopt);

/// S(F,G) = (LCM/LT(F))*F + (LCM/LT(G))*G. Requires nonzero inputs.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct ReduceStep {
    Polynomial result;
    Monomial eliminated;  // the monomial of the input that was cancelled
    Monomial quotient;    // eliminated / LT(divisor)
};

/// Cancels the lex-greatest monomial of f divisible by LT(g).
/// Throws std::domain_error("not reducible") if no such monomial exists.
ReduceStep reduce_once_step(const Polynomial& f, const Polynomial& g);
Polynomial reduce_once(const Polynomial& f, const Polynomial& g);

/// Full division remainder: repeatedly reduces the lex-greatest reducible
/// monomial by the first basis element whose leading term divides it, until
/// no monomial of the result is divisible by any basis leading term.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

bool is_homogeneous(const Polynomial& f) noexcept;

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return mul(f, g); }
inline Polynomial operator*(const Monomial& m, const Polynomial& f) { return mul(m, f); }

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position;
};

/// Text grammar: terms joined by " + "; a term is "1", "w2^P", "w3^Q" or
/// "w2^P*w3^Q" with "^1" elided; the zero polynomial is "0".
Polynomial parse_poly(std::string_view text);
std::string format_poly(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace grcup
