#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace topcell {

/// Exact integer type used for all coefficients and matrix entries.
using Int = boost::multiprecision::cpp_int;

enum class errc {
    ok = 0,
    duplicate_generator,
    inhomogeneous_rule,
    self_referencing_rule,
    duplicate_rule,
    ring_mismatch,
    incompatible_rings,
    mixed_base_rings,
    unsupported_prime,
    non_polynomial_input,
    index_out_of_range,
    ill_defined_homo,
    malformed_spec,
    missing_arrow,
    twist_without_cup,
    cycle_not_in_kernel,
    endpoint_mismatch,
    missing_pic_data,
    shape_mismatch,
    eigen_equation_failed,
    parse_error,
    invalid_argument,
    internal_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace topcell
