#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tlss {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);
Digest sha256(std::string_view data);

std::string to_hex(std::span<const std::uint8_t> bytes);

/// Minimal big-endian byte encoding of a nonnegative integer; 0 encodes to
/// the empty string.
std::vector<std::uint8_t> to_bytes_be(const mpz_class& value);
mpz_class from_bytes_be(std::span<const std::uint8_t> bytes);

/// Number of leading zero bits of the digest, 0..256.
int leading_zero_bits(const Digest& digest);

} // namespace tlss
