#ifndef HYPERSPLIT_ERRORS_HPP
#define HYPERSPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hypersplit {

// Malformed input file. The message carries file name and byte position
// when they are known.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An instance or argument violates a documented invariant. The message
// names the offending field or entity.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive computation was refused because it exceeds the caller's
// budget. Never a silent truncation.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Point configuration is not in general position. Carries one offending
// point subset as a certificate.
struct DegenerateInputError : std::runtime_error {
    DegenerateInputError(const std::string& msg, std::vector<int> subset)
        : std::runtime_error(msg), offending(std::move(subset)) {}
    std::vector<int> offending;
};

// Requested subset admits no strict separating hyperplane.
struct NonRealizableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hypersplit

#endif
