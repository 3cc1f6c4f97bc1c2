#include "tlss/sss.hpp"

#include <set>

namespace tlss {

SchemeParams SchemeParams::make(FieldPtr field, std::size_t threshold_t,
                                std::size_t participant_count_m,
                                std::vector<FieldElement> public_keys) {
    if (threshold_t <= 1 || threshold_t > participant_count_m) {
        raise(Errc::threshold_invalid, "need 1 < t <= m, got t=" + std::to_string(threshold_t) +
                                           " m=" + std::to_string(participant_count_m));
    }
    if (field->modulus() <= static_cast<unsigned long>(participant_count_m)) {
        raise(Errc::too_many_participants,
              "m=" + std::to_string(participant_count_m) + " must be below p=" + field->modulus().get_str());
    }
    if (public_keys.size() != participant_count_m) {
        raise(Errc::length_mismatch, std::to_string(public_keys.size()) + " keys for m=" +
                                         std::to_string(participant_count_m) + " participants");
    }
    std::set<mpz_class> seen;
    for (const FieldElement& key : public_keys) {
        if (!key.field()->same_as(*field)) {
            raise(Errc::field_mismatch, "public key " + key.str() + " lives in the wrong field");
        }
        if (key.is_zero()) {
            raise(Errc::zero_key, "public keys must be units of F_p");
        }
        if (!seen.insert(key.value()).second) {
            raise(Errc::duplicate_key, "public key " + key.str() + " appears twice");
        }
    }
    return SchemeParams{std::move(field), threshold_t, participant_count_m, std::move(public_keys)};
}

std::optional<std::size_t> SchemeParams::key_index(const FieldElement& key) const {
    for (std::size_t i = 0; i < public_keys.size(); ++i) {
        if (public_keys[i] == key) {
            return i;
        }
    }
    return std::nullopt;
}

SingleSecretSession::SingleSecretSession(SchemeParams params, OneWayFunction oneway, Polynomial f)
    : params_(std::move(params)), oneway_(std::move(oneway)), polys_{f, oneway_.lift(f)} {
    if (!oneway_.field()->same_as(*params_.field)) {
        raise(Errc::field_mismatch, "one-way function field differs from scheme field");
    }
    if (polys_.f.coeff_count() != params_.threshold_t) {
        raise(Errc::wrong_count, "f must carry exactly t=" + std::to_string(params_.threshold_t) +
                                     " coefficients, got " + std::to_string(polys_.f.coeff_count()));
    }
    records_.reserve(params_.participant_count_m);
    for (const FieldElement& key : params_.public_keys) {
        records_.push_back(ShareRecord{key, polys_.h.evaluate(key), polys_.f.evaluate(key), false});
    }
}

SingleSecretSession SingleSecretSession::generate(SchemeParams params, OneWayFunction oneway,
                                                  const FieldElement& secret, RandomSource& rng) {
    if (!secret.field()->same_as(*params.field)) {
        raise(Errc::field_mismatch, "secret lives in the wrong field");
    }
    Polynomial f = Polynomial::random(secret, params.threshold_t, rng);
    return SingleSecretSession(std::move(params), std::move(oneway), std::move(f));
}

SingleSecretSession SingleSecretSession::from_polynomials(SchemeParams params,
                                                          OneWayFunction oneway, Polynomial f) {
    if (!f.field()->same_as(*params.field)) {
        raise(Errc::field_mismatch, "f lives in the wrong field");
    }
    return SingleSecretSession(std::move(params), std::move(oneway), std::move(f));
}

std::size_t SingleSecretSession::require_key(const FieldElement& key) const {
    if (auto idx = params_.key_index(key)) {
        return *idx;
    }
    raise(Errc::unknown_key, key.str() + " is not a registered public key");
}

std::vector<SharePair> SingleSecretSession::level1_shares(
    std::span<const FieldElement> keys) const {
    std::vector<SharePair> out;
    out.reserve(keys.size());
    for (const FieldElement& key : keys) {
        out.push_back(SharePair{key, records_[require_key(key)].h_share});
    }
    return out;
}

bool SingleSecretSession::level1_share_matches(const FieldElement& key,
                                               const FieldElement& submitted) const {
    return records_[require_key(key)].h_share == submitted;
}

std::optional<SingleSecretSession::Release> SingleSecretSession::verify_and_release(
    const FieldElement& claimed, std::span<const FieldElement> submitting_keys) {
    std::vector<std::size_t> indices;
    indices.reserve(submitting_keys.size());
    for (const FieldElement& key : submitting_keys) {
        indices.push_back(require_key(key));
    }
    if (claimed != expected_level1() || indices.size() < params_.threshold_t) {
        return std::nullopt;
    }
    Release release;
    release.f_shares.reserve(indices.size());
    for (std::size_t idx : indices) {
        records_[idx].f_released = true;
        release.f_shares.push_back(SharePair{records_[idx].public_key, records_[idx].f_share});
    }
    return release;
}

LevelOneRecovery recover_level1(std::span<const EvalPoint> points, std::size_t threshold_t) {
    Polynomial h = Polynomial::interpolate(points, threshold_t);
    FieldElement claimed = h.constant_term();
    return LevelOneRecovery{std::move(h), std::move(claimed)};
}

FieldElement recover_level2(std::span<const EvalPoint> points, std::size_t threshold_t) {
    return Polynomial::interpolate(points, threshold_t).constant_term();
}

} // namespace tlss
