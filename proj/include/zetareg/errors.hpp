#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace zetareg {

// Machine-readable error codes surfaced through the CLI.  The class of a code
// determines the process exit status: parse errors exit 2, everything else
// thrown as Error exits 1 (verification failures are report content, exit 3).
enum class ErrorCode {
    gamma_pole,             // gamma at 0 or a negative integer
    zeta_pole,              // zeta at s = 1
    zeta_pole_proximity,    // zeta inside the 1e-6 guard band around s = 1
    mu_negative_integer,    // mu at a negative integer argument
    argument_log_pole,      // r = -1: the logarithmic slice, out of scope
    nonconvergent_domain,   // series certificate requested for r <= -1
    divergence_suspected,   // |a_k mu(k)| failed to decay
    tail_bound_unavailable, // non-alternating series without a declared bound
    unknown_series,         // builtin series name not registered
    bad_argument,           // argument outside an operation's domain
    argument_too_large,     // exact-arithmetic size cap exceeded
    grid_too_large,         // lambda-table row cap exceeded
    division_by_zero,
    parse_error,            // malformed expression (generic)
    unknown_function,
    bad_arity,
    malformed_number,
    bad_series_file,        // series file format violation
    io_error,
};

const char* error_code_name(ErrorCode code);

// Parse-class codes exit 2; everything else exits 1.
bool is_parse_error(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}
    Error(ErrorCode code, std::string message, std::size_t offset)
        : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

    ErrorCode code() const { return code_; }
    // Byte offset into the parsed input, when the error is positional.
    const std::optional<std::size_t>& offset() const { return offset_; }

  private:
    ErrorCode code_;
    std::optional<std::size_t> offset_;
};

} // namespace zetareg
