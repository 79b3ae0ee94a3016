#pragma once

#include <stdexcept>
#include <string>

namespace scatlab {

enum class Err {
    non_prime,
    reducible,
    size_limit,
    division_by_zero,
    not_a_divisor,
    field_mismatch,
    gcd_violation,
    norm_condition,
    bad_degree,
    bad_residue,
    bad_parameter,
    zero_map,
    degenerate_subspace,
    degenerate_code,
    dependent_basis,
    not_same_linear_set,
    budget_exceeded,
};

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

} // namespace scatlab
