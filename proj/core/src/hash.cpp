#include "tlss/hash.hpp"

#include <bit>
#include <stdexcept>

#include <openssl/evp.h>

namespace tlss {

Digest sha256(std::span<const std::uint8_t> data) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size()) {
        throw std::runtime_error("sha256: EVP_Digest failed");
    }
    return out;
}

Digest sha256(std::string_view data) {
    return sha256(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

std::vector<std::uint8_t> to_bytes_be(const mpz_class& value) {
    if (sgn(value) < 0) {
        throw std::invalid_argument("to_bytes_be: negative value");
    }
    if (sgn(value) == 0) {
        return {};
    }
    std::vector<std::uint8_t> out((mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8);
    std::size_t written = 0;
    mpz_export(out.data(), &written, 1, 1, 1, 0, value.get_mpz_t());
    out.resize(written);
    return out;
}

mpz_class from_bytes_be(std::span<const std::uint8_t> bytes) {
    mpz_class out;
    if (!bytes.empty()) {
        mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    }
    return out;
}

int leading_zero_bits(const Digest& digest) {
    int bits = 0;
    for (std::uint8_t b : digest) {
        if (b == 0) {
            bits += 8;
            continue;
        }
        bits += std::countl_zero(b);
        break;
    }
    return bits;
}

} // namespace tlss
