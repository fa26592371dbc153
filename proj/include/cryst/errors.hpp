#pragma once

#include <stdexcept>
#include <string>

namespace cryst {

enum class errc {
    loop_edge,
    not_involution,
    color_count_mismatch,
    disconnected,
    wrong_dimension,
    not_contracted,
    out_of_range,
    same_color,
    self_sum,
    empty_spec,
    too_large,
    odd_order,
    missing_data,
    validation_failed,
    parse_error,
    illegal_move,
    invalid_config,
};

const char* errc_name(errc c);

/// All library failures throw this; code() tells callers which contract broke.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace cryst
