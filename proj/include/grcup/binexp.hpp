#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace grcup {

/// Fixed-length big-endian bit vector: index 0 is the most significant bit.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits);
    static BitString from_value(std::uint64_t x, std::size_t k);

    std::size_t length() const noexcept { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    std::uint64_t value() const noexcept;
    BitString complement() const;
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Length-k big-endian expansion of x. Throws if x >= 2^k.
BitString bits(std::uint64_t x, std::size_t k);

/// C(n, k) mod 2: 1 iff the bit support of k is contained in that of n.
/// Returns 0 for k > n.
int binom_parity(std::uint64_t n, std::uint64_t k) noexcept;

/// Membership in Delta_k by the recursive characterization:
/// Delta_0 = {()}, Delta_1 = {(1)}, and v is a member iff v = (1, v') with
/// v' in Delta_{k-1}, or v = (0, 0, v'') with v'' in Delta_{k-2}.
bool delta_member(const BitString& v) noexcept;

struct DeltaSet {
    std::size_t k = 0;
    std::vector<BitString> members;  // ascending by value
};

DeltaSet delta_enumerate(std::size_t k);

/// Values of the Delta_k members, ascending. |Delta_k| grows like Fibonacci.
std::vector<std::uint64_t> delta_values(std::size_t k);

/// S_k: integers s in [ceil((n(k)+2)/3), floor((n(k)+2)/2)], n(k) = 2^{k+1}-4,
/// whose expansion satisfies: bit j = 0 implies bit j+1 = 1 (no constraint
/// when j+1 is past the top). Sorted ascending. Requires k >= 2.
std::vector<std::int64_t> s_set(int k);

/// S'_k: same condition over [ceil((n(k)+3)/3), floor((n(k)+3)/2)] with the
/// additional requirement that the lowest bit is 1. Requires k >= 2.
std::vector<std::int64_t> s_prime_set(int k);

/// Images of s_set / s_prime_set under p = 3s - (n(k)+2), p' = 3s' - (n(k)+3).
std::vector<std::int64_t> p_set(int k);
std::vector<std::int64_t> p_prime_set(int k);

}  // namespace grcup
