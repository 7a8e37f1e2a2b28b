// antimagic/error.hpp - error type shared by every module

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antimagic {

enum class ErrorKind {
    invalid_parameters,
    malformed_partition,
    invalid_labeling,
    parse_error,
    out_of_domain,
    out_of_range,
    internal_consistency,
    refuse_to_run,
    io_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace antimagic
