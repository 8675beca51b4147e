#include "grcup/f2poly.hpp"

#include <algorithm>
#include <cctype>

namespace grcup {

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b) noexcept {
    return a <=> b;
}

bool mono_divides(const Monomial& d, const Monomial& m) noexcept {
    return d.p <= m.p && d.q <= m.q;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    if (__builtin_add_overflow(a.p, b.p, &r.p) || __builtin_add_overflow(a.q, b.q, &r.q))
        throw std::overflow_error("monomial exponent overflow");
    return r;
}

Monomial mono_div(const Monomial& num, const Monomial& den) {
    if (!mono_divides(den, num)) throw std::domain_error("monomial not divisible");
    return {num.p - den.p, num.q - den.q};
}

Monomial lcm_mono(const Monomial& a, const Monomial& b) noexcept {
    return {std::max(a.p, b.p), std::max(a.q, b.q)};
}

namespace detail {
Polynomial make_sorted_poly(std::vector<Monomial>&& sorted) {
    return Polynomial(std::move(sorted));
}
}  // namespace detail

namespace {

// Sort descending and cancel monomials occurring an even number of times.
std::vector<Monomial> normalize_terms(std::vector<Monomial> ts) {
    std::sort(ts.begin(), ts.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
    std::vector<Monomial> out;
    out.reserve(ts.size());
    std::size_t i = 0;
    while (i < ts.size()) {
        std::size_t j = i;
        while (j < ts.size() && ts[j] == ts[i]) ++j;
        if ((j - i) % 2 != 0) out.push_back(ts[i]);
        i = j;
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(std::initializer_list<Monomial> terms) {
    *this = from_terms(std::vector<Monomial>(terms));
}

Polynomial Polynomial::from_terms(std::vector<Monomial> terms) {
    for (const Monomial& t : terms)
        if (t.p < 0 || t.q < 0) throw std::invalid_argument("negative exponent in monomial");
    return Polynomial(normalize_terms(std::move(terms)));
}

const Monomial& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("no leading term");
    return terms_.front();
}

std::optional<std::int64_t> Polynomial::max_degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    std::int64_t d = terms_.front().degree();
    for (const Monomial& t : terms_) d = std::max(d, t.degree());
    return d;
}

bool Polynomial::contains_term(const Monomial& m) const noexcept {
    return std::binary_search(terms_.begin(), terms_.end(), m,
                              [](const Monomial& a, const Monomial& b) { return b < a; });
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
    std::vector<Monomial> out;
    out.reserve(f.term_count() + g.term_count());
    auto a = f.terms().begin();
    const auto ae = f.terms().end();
    auto b = g.terms().begin();
    const auto be = g.terms().end();
    while (a != ae && b != be) {
        if (*a == *b) {
            ++a;
            ++b;
        } else if (*b < *a) {
            out.push_back(*a++);
        } else {
            out.push_back(*b++);
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    return detail::make_sorted_poly(std::move(out));
}

Polynomial mul(const Polynomial& f, const Polynomial& g,
               std::optional<std::int64_t> degree_cap) {
    std::vector<Monomial> prods;
    prods.reserve(f.term_count() * g.term_count());
    for (const Monomial& a : f.terms()) {
        for (const Monomial& b : g.terms()) {
            Monomial m = mono_mul(a, b);
            if (degree_cap && m.degree() > *degree_cap) continue;
            prods.push_back(m);
        }
    }
    return Polynomial::from_terms(std::move(prods));
}

Polynomial mul(const Monomial& m, const Polynomial& f) {
    std::vector<Monomial> out;
    out.reserve(f.term_count());
    // Translation by a fixed exponent vector preserves the descending order.
    for (const Monomial& t : f.terms()) out.push_back(mono_mul(t, m));
    return detail::make_sorted_poly(std::move(out));
}

Polynomial power(const Polynomial& f, std::uint64_t e,
                 std::optional<std::int64_t> degree_cap) {
    Polynomial result{Monomial{0, 0}};
    Polynomial base = f;
    while (e != 0) {
        if (e & 1) result = mul(result, base, degree_cap);
        e >>= 1;
        if (e != 0) base = mul(base, base, degree_cap);
    }
    return result;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial lcm = lcm_mono(f.leading_term(), g.leading_term());
    return add(mul(mono_div(lcm, f.leading_term()), f),
               mul(mono_div(lcm, g.leading_term()), g));
}

ReduceStep reduce_once_step(const Polynomial& f, const Polynomial& g) {
    const Monomial& lt = g.leading_term();
    // Terms are descending, so the first divisible one is the lex-greatest.
    for (const Monomial& t : f.terms()) {
        if (!mono_divides(lt, t)) continue;
        const Monomial quot = mono_div(t, lt);
        return {add(f, mul(quot, g)), t, quot};
    }
    throw std::domain_error("not reducible");
}

Polynomial reduce_once(const Polynomial& f, const Polynomial& g) {
    return reduce_once_step(f, g).result;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
    for (const Polynomial& b : basis)
        if (b.is_zero()) throw std::invalid_argument("zero polynomial in basis");
    Polynomial work = f;
    std::size_t frontier = 0;  // terms before this index are confirmed irreducible
    while (frontier < work.term_count()) {
        const Monomial t = work.terms()[frontier];
        const Polynomial* divisor = nullptr;
        for (const Polynomial& b : basis) {
            if (mono_divides(b.leading_term(), t)) {
                divisor = &b;
                break;
            }
        }
        if (divisor == nullptr) {
            ++frontier;
            continue;
        }
        // t is cancelled and everything newly introduced is lex-smaller than
        // t, so the confirmed prefix is untouched.
        work = add(work, mul(mono_div(t, divisor->leading_term()), *divisor));
    }
    return work;
}

bool is_homogeneous(const Polynomial& f) noexcept {
    if (f.is_zero()) return true;
    const std::int64_t d = f.terms().front().degree();
    for (const Monomial& t : f.terms())
        if (t.degree() != d) return false;
    return true;
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error("parse error at offset " + std::to_string(pos) + ": " + msg),
      position(pos) {}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    bool eof() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!eof() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool consume(char c) {
        if (!eof() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool consume(std::string_view lit) {
        if (s.substr(i, lit.size()) == lit) {
            i += lit.size();
            return true;
        }
        return false;
    }
};

std::int64_t parse_exponent(Cursor& c) {
    const std::size_t start = c.i;
    if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ParseError("expected exponent digits", c.i);
    std::uint64_t v = 0;
    while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + static_cast<std::uint64_t>(c.peek() - '0');
        if (v > (std::uint64_t{1} << 31)) throw ParseError("exponent out of range", start);
        ++c.i;
    }
    return static_cast<std::int64_t>(v);
}

Monomial parse_term(Cursor& c) {
    if (c.consume('1')) return {0, 0};
    Monomial m{0, 0};
    if (c.consume("w2")) {
        m.p = c.consume('^') ? parse_exponent(c) : 1;
        if (c.consume('*')) {
            if (!c.consume("w3")) throw ParseError("expected w3 after '*'", c.i);
            m.q = c.consume('^') ? parse_exponent(c) : 1;
        }
        return m;
    }
    if (c.consume("w3")) {
        m.q = c.consume('^') ? parse_exponent(c) : 1;
        return m;
    }
    throw ParseError("expected term", c.i);
}

}  // namespace

Polynomial parse_poly(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    if (c.eof()) throw ParseError("empty input", c.i);
    if (c.peek() == '0') {
        ++c.i;
        c.skip_ws();
        if (!c.eof()) throw ParseError("unexpected input after '0'", c.i);
        return {};
    }
    std::vector<Monomial> terms;
    terms.push_back(parse_term(c));
    c.skip_ws();
    while (!c.eof()) {
        if (!c.consume('+')) throw ParseError("expected '+'", c.i);
        c.skip_ws();
        terms.push_back(parse_term(c));
        c.skip_ws();
    }
    return Polynomial::from_terms(std::move(terms));
}

namespace {

void format_term(std::string& out, const Monomial& t) {
    if (t.p == 0 && t.q == 0) {
        out += '1';
        return;
    }
    if (t.p > 0) {
        out += "w2";
        if (t.p > 1) {
            out += '^';
            out += std::to_string(t.p);
        }
        if (t.q > 0) out += '*';
    }
    if (t.q > 0) {
        out += "w3";
        if (t.q > 1) {
            out += '^';
            out += std::to_string(t.q);
        }
    }
}

}  // namespace

std::string format_poly(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Monomial& t : f.terms()) {
        if (!first) out += " + ";
        format_term(out, t);
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    return os << '(' << m.p << ',' << m.q << ')';
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    return os << format_poly(f);
}

}  // namespace grcup
