#pragma once

#include <cstddef>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace curvetk {

// Every failure the toolkit can raise, machine-readable so the CLI can map
// them to exit codes and embed them in reports.
enum class errc {
    syntax_error,
    unknown_identifier,
    non_integer_exponent,
    domain_error,
    guard_violation,
    jet_order_exhausted,
    frame_undefined,
    singular_speed,
    torsion_zero,
    not_bertrand,
    theta_degenerate,
    degenerate_denominator,
    not_normal_field,
    not_helix_base,
    degenerate,
    config_error,
    io_error,
    degenerate_fixture,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

    Error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    // Parser errors carry the byte offset of the offending token.
    Error(errc code, std::string message, std::size_t offset)
        : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

    // Wrapped errors (e.g. NotBertrand caused by FrameUndefined on the
    // partner) keep the underlying code so callers can branch on it.
    Error(errc code, std::string message, errc cause)
        : std::runtime_error(std::move(message)), code_(code), cause_(cause) {}

    errc code() const noexcept { return code_; }
    std::size_t offset() const noexcept { return offset_; }
    std::optional<errc> cause() const noexcept { return cause_; }

private:
    errc code_;
    std::size_t offset_ = no_offset;
    std::optional<errc> cause_;
};

[[noreturn]] inline void raise(errc code, std::string message) {
    throw Error(code, std::move(message));
}

// Diagnostic formatting for measured magnitudes. std::to_string clamps to
// six fixed decimals and renders every guard-sized value as 0.000000.
inline std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace curvetk
