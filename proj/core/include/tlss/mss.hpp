#pragma once

#include <span>
#include <vector>

#include "tlss/sss.hpp"

namespace tlss {

/// Multisecret s = (s_1..s_m). The first k components carry the message; the
/// rest are dealer-side redundancy ("parity"). Components are full field
/// elements, not binary digits.
struct SecretVector {
    std::vector<FieldElement> components;
    std::size_t message_count_k = 0;

    static SecretVector make(std::vector<FieldElement> components, std::size_t message_count_k);
};

/// Values derived from the secret vector: the public total s~ = sum(s_i),
/// alpha_i = s~ - s_i for i = 1..t, and their one-way images.
struct MssDerived {
    FieldElement s_tilde;
    std::vector<FieldElement> alphas;
    std::vector<FieldElement> h_alphas;
};

MssDerived mss_derive(const SecretVector& secret, const SchemeParams& params,
                      const OneWayFunction& oneway);

/// f's coefficients are exactly (alpha_1..alpha_t); h's are their images.
/// Unlike the single-secret scheme there is no fresh randomness here.
SharePolynomials mss_polynomials(const MssDerived& derived, const SchemeParams& params);

struct RecoveredComponents {
    std::vector<FieldElement> all; // s_j = s~ - alpha_j for j = 1..t
    std::size_t message_count_k = 0;

    std::span<const FieldElement> message() const {
        return std::span(all).first(message_count_k);
    }
};

/// Final step after level 2: components from the recovered f and public s~.
/// Only the first k are message; the rest are exposed for diagnostics.
RecoveredComponents mss_recover(const Polynomial& recovered_f, const FieldElement& s_tilde,
                                std::size_t message_count_k);

} // namespace tlss
