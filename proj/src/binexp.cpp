#include "grcup/binexp.hpp"

#include <algorithm>
#include <stdexcept>

namespace grcup {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_)
        if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
}

BitString BitString::from_value(std::uint64_t x, std::size_t k) {
    if (k > 63) throw std::invalid_argument("bit length too large");
    if (k < 64 && (x >> k) != 0) throw std::invalid_argument("value out of range for bit length");
    std::vector<std::uint8_t> b(k);
    for (std::size_t i = 0; i < k; ++i) b[i] = static_cast<std::uint8_t>((x >> (k - 1 - i)) & 1);
    return BitString(std::move(b));
}

std::uint64_t BitString::value() const noexcept {
    std::uint64_t v = 0;
    for (std::uint8_t b : bits_) v = (v << 1) | b;
    return v;
}

BitString BitString::complement() const {
    std::vector<std::uint8_t> b = bits_;
    for (std::uint8_t& x : b) x ^= 1;
    return BitString(std::move(b));
}

BitString bits(std::uint64_t x, std::size_t k) {
    return BitString::from_value(x, k);
}

int binom_parity(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    return (k & ~n) == 0 ? 1 : 0;
}

namespace {

bool delta_member_span(std::span<const std::uint8_t> b) noexcept {
    if (b.empty()) return true;
    if (b.size() == 1) return b[0] == 1;
    if (b[0] == 1) return delta_member_span(b.subspan(1));
    return b[1] == 0 && delta_member_span(b.subspan(2));
}

}  // namespace

bool delta_member(const BitString& v) noexcept {
    return delta_member_span(v.bits());
}

std::vector<std::uint64_t> delta_values(std::size_t k) {
    if (k > 62) throw std::invalid_argument("delta length too large");
    std::vector<std::vector<std::uint64_t>> table(std::max<std::size_t>(k + 1, 2));
    table[0] = {0};
    table[1] = {1};
    for (std::size_t j = 2; j <= k; ++j) {
        std::vector<std::uint64_t> cur;
        cur.reserve(table[j - 1].size() + table[j - 2].size());
        // All (0,0,tail) values sit below 2^{j-2}, so the merge stays sorted.
        for (std::uint64_t v : table[j - 2]) cur.push_back(v);
        for (std::uint64_t v : table[j - 1]) cur.push_back((std::uint64_t{1} << (j - 1)) | v);
        table[j] = std::move(cur);
    }
    return table[k];
}

DeltaSet delta_enumerate(std::size_t k) {
    DeltaSet out;
    out.k = k;
    for (std::uint64_t v : delta_values(k)) out.members.push_back(BitString::from_value(v, k));
    return out;
}

namespace {

void check_k(int k) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return (a + b - 1) / b;
}

// The "bit j = 0 implies bit j+1 = 1" condition, checked strictly below the
// top bit; an out-of-range index j+1 = k imposes no constraint.
bool run_condition_ok(std::int64_t s, int k) {
    for (int j = 0; j + 1 < k; ++j)
        if (((s >> j) & 1) == 0 && ((s >> (j + 1)) & 1) == 0) return false;
    return true;
}

void assert_top_bit(std::int64_t s, int k) {
    if (((s >> (k - 1)) & 1) != 1)
        throw std::logic_error("top bit unexpectedly clear on the S_k range");
}

}  // namespace

std::vector<std::int64_t> s_set(int k) {
    check_k(k);
    const std::int64_t nk = (std::int64_t{1} << (k + 1)) - 4;
    std::vector<std::int64_t> out;
    for (std::int64_t s = ceil_div(nk + 2, 3); s <= (nk + 2) / 2; ++s) {
        if (!run_condition_ok(s, k)) continue;
        assert_top_bit(s, k);
        out.push_back(s);
    }
    return out;
}

std::vector<std::int64_t> s_prime_set(int k) {
    check_k(k);
    const std::int64_t nk = (std::int64_t{1} << (k + 1)) - 4;
    std::vector<std::int64_t> out;
    for (std::int64_t s = ceil_div(nk + 3, 3); s <= (nk + 3) / 2; ++s) {
        if ((s & 1) != 1) continue;
        if (!run_condition_ok(s, k)) continue;
        assert_top_bit(s, k);
        out.push_back(s);
    }
    return out;
}

std::vector<std::int64_t> p_set(int k) {
    const std::int64_t nk = (std::int64_t{1} << (k + 1)) - 4;
    std::vector<std::int64_t> out;
    for (std::int64_t s : s_set(k)) out.push_back(3 * s - (nk + 2));
    return out;
}

std::vector<std::int64_t> p_prime_set(int k) {
    const std::int64_t nk = (std::int64_t{1} << (k + 1)) - 4;
    std::vector<std::int64_t> out;
    for (std::int64_t s : s_prime_set(k)) out.push_back(3 * s - (nk + 3));
    return out;
}

}  // namespace grcup
