#include "tlss/rng.hpp"

#include <limits>
#include <stdexcept>

#include "tlss/hash.hpp"

namespace tlss {

std::uint64_t RandomSource::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("RandomSource::below: zero bound");
    }
    // Rejection sampling: accept v only below the largest multiple of bound.
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v > limit);
    return v % bound;
}

mpz_class RandomSource::below(const mpz_class& bound) {
    if (sgn(bound) <= 0) {
        throw std::invalid_argument("RandomSource::below: nonpositive bound");
    }
    if (mpz_fits_ulong_p(bound.get_mpz_t())) {
        return mpz_class(static_cast<unsigned long>(below(static_cast<std::uint64_t>(bound.get_ui()))));
    }
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t nbytes = (bits + 7) / 8;
    std::vector<std::uint8_t> buf(nbytes);
    while (true) {
        for (std::size_t i = 0; i < nbytes; i += 8) {
            std::uint64_t word = next_u64();
            for (std::size_t j = 0; j < 8 && i + j < nbytes; ++j) {
                buf[i + j] = static_cast<std::uint8_t>(word >> (56 - 8 * j));
            }
        }
        mpz_class candidate = from_bytes_be(buf);
        mpz_fdiv_r_2exp(candidate.get_mpz_t(), candidate.get_mpz_t(), bits);
        if (candidate < bound) {
            return candidate;
        }
    }
}

FieldElement RandomSource::nonzero_element(const FieldPtr& field) {
    return field->element(below(field->modulus() - 1) + 1);
}

} // namespace tlss
