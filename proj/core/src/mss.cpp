#include "tlss/mss.hpp"

namespace tlss {

SecretVector SecretVector::make(std::vector<FieldElement> components,
                                std::size_t message_count_k) {
    if (components.empty()) {
        raise(Errc::length_mismatch, "secret vector must be nonempty");
    }
    for (std::size_t i = 1; i < components.size(); ++i) {
        require_same_field(components[0], components[i]);
    }
    if (message_count_k <= 1 || message_count_k > components.size()) {
        raise(Errc::message_bits_invalid,
              "need 1 < k <= component count, got k=" + std::to_string(message_count_k));
    }
    return SecretVector{std::move(components), message_count_k};
}

MssDerived mss_derive(const SecretVector& secret, const SchemeParams& params,
                      const OneWayFunction& oneway) {
    if (secret.components.size() != params.participant_count_m) {
        raise(Errc::length_mismatch,
              "secret has " + std::to_string(secret.components.size()) + " components, m=" +
                  std::to_string(params.participant_count_m));
    }
    if (secret.message_count_k > params.threshold_t) {
        raise(Errc::message_bits_invalid, "message components k=" +
                                              std::to_string(secret.message_count_k) +
                                              " exceed threshold t=" +
                                              std::to_string(params.threshold_t));
    }
    if (params.threshold_t > params.participant_count_m - 1) {
        raise(Errc::threshold_too_large, "multisecret case needs t <= m-1");
    }
    require_same_field(secret.components.front(), params.field->zero());

    FieldElement s_tilde = params.field->zero();
    for (const FieldElement& s : secret.components) {
        s_tilde = s_tilde + s;
    }
    MssDerived derived{s_tilde, {}, {}};
    derived.alphas.reserve(params.threshold_t);
    derived.h_alphas.reserve(params.threshold_t);
    for (std::size_t i = 0; i < params.threshold_t; ++i) {
        // alpha_i = sum_{j != i} s_j = s~ - s_i
        FieldElement alpha = s_tilde - secret.components[i];
        derived.h_alphas.push_back(oneway.apply(alpha));
        derived.alphas.push_back(std::move(alpha));
    }
    return derived;
}

SharePolynomials mss_polynomials(const MssDerived& derived, const SchemeParams& params) {
    if (derived.alphas.size() != params.threshold_t ||
        derived.h_alphas.size() != params.threshold_t) {
        raise(Errc::length_mismatch, "derived lists must have exactly t entries");
    }
    return SharePolynomials{Polynomial(derived.alphas), Polynomial(derived.h_alphas)};
}

RecoveredComponents mss_recover(const Polynomial& recovered_f, const FieldElement& s_tilde,
                                std::size_t message_count_k) {
    if (message_count_k <= 1 || message_count_k > recovered_f.coeff_count()) {
        raise(Errc::message_bits_invalid,
              "need 1 < k <= t, got k=" + std::to_string(message_count_k) + " with t=" +
                  std::to_string(recovered_f.coeff_count()));
    }
    RecoveredComponents out{{}, message_count_k};
    out.all.reserve(recovered_f.coeff_count());
    for (const FieldElement& alpha : recovered_f.coeffs()) {
        out.all.push_back(s_tilde - alpha);
    }
    return out;
}

} // namespace tlss
