#include "curvetk/error.hpp"

namespace curvetk {

const char* errc_name(errc code) {
    switch (code) {
        case errc::syntax_error: return "SyntaxError";
        case errc::unknown_identifier: return "UnknownIdentifier";
        case errc::non_integer_exponent: return "NonIntegerExponent";
        case errc::domain_error: return "DomainError";
        case errc::guard_violation: return "GuardViolation";
        case errc::jet_order_exhausted: return "JetOrderExhausted";
        case errc::frame_undefined: return "FrameUndefined";
        case errc::singular_speed: return "SingularSpeed";
        case errc::torsion_zero: return "TorsionZero";
        case errc::not_bertrand: return "NotBertrand";
        case errc::theta_degenerate: return "ThetaDegenerate";
        case errc::degenerate_denominator: return "DegenerateDenominator";
        case errc::not_normal_field: return "NotNormalField";
        case errc::not_helix_base: return "NotHelixBase";
        case errc::degenerate: return "Degenerate";
        case errc::config_error: return "ConfigError";
        case errc::io_error: return "IoError";
        case errc::degenerate_fixture: return "DegenerateFixture";
    }
    return "UnknownError";
}

} // namespace curvetk
