#include "tlss/errors.hpp"

namespace tlss {

const char* to_string(Errc code) noexcept {
    switch (code) {
    case Errc::composite_modulus: return "CompositeModulus";
    case Errc::modulus_too_small: return "ModulusTooSmall";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::zero_inverse: return "ZeroInverse";
    case Errc::undefined_power: return "UndefinedPower";
    case Errc::duplicate_node: return "DuplicateNode";
    case Errc::wrong_count: return "WrongCount";
    case Errc::threshold_invalid: return "ThresholdInvalid";
    case Errc::duplicate_key: return "DuplicateKey";
    case Errc::zero_key: return "ZeroKey";
    case Errc::zero_generator: return "ZeroGenerator";
    case Errc::too_many_participants: return "TooManyParticipants";
    case Errc::unknown_key: return "UnknownKey";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::message_bits_invalid: return "MessageBitsInvalid";
    case Errc::threshold_too_large: return "ThresholdTooLarge";
    case Errc::mode_unavailable: return "ModeUnavailable";
    case Errc::config_invalid: return "ConfigInvalid";
    case Errc::no_transactions: return "NoTransactions";
    case Errc::committee_collapse: return "CommitteeCollapse";
    case Errc::field_too_small: return "FieldTooSmall";
    case Errc::unbalanced_amounts: return "UnbalancedAmounts";
    case Errc::empty_block: return "EmptyBlock";
    case Errc::difficulty_too_high: return "DifficultyTooHigh";
    case Errc::orphan_parent: return "OrphanParent";
    case Errc::invalid_pow: return "InvalidPoW";
    case Errc::merkle_mismatch: return "MerkleMismatch";
    case Errc::bad_height: return "BadHeight";
    case Errc::corrupt_store: return "CorruptStore";
    case Errc::self_check_failed: return "SelfCheckFailed";
    case Errc::unknown_example: return "UnknownExample";
    }
    return "UnknownError";
}

} // namespace tlss
