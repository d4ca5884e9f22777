#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conc {

enum class errc {
    syntax,
    dimension_mismatch,
    zero_state,
    length_mismatch,
    bad_subset,
    dim_too_large,
    unsupported_params,
    no_convergence,
    wrong_dims,
    io,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::syntax: return "syntax";
        case errc::dimension_mismatch: return "dims";
        case errc::zero_state: return "zero_state";
        case errc::length_mismatch: return "length";
        case errc::bad_subset: return "bad_subset";
        case errc::dim_too_large: return "dim_too_large";
        case errc::unsupported_params: return "unsupported";
        case errc::no_convergence: return "no_convergence";
        case errc::wrong_dims: return "wrong_dims";
        case errc::io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

// Parse error carrying the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::string message)
        : Error(errc::syntax, message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace conc
