#pragma once

#include <stdexcept>
#include <string>

namespace amz
{

// Process exit codes used by the command line front end.
enum class exit_code : int {
    ok = 0,
    parse = 1,
    precondition = 2,
    budget = 3,
    invariant = 4,
};

class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
    virtual exit_code code() const noexcept = 0;
};

// Malformed input (JSON, option values, coefficient strings).
class parse_error : public error
{
public:
    using error::error;
    exit_code code() const noexcept override { return exit_code::parse; }
};

// Input is well formed but violates a mathematical precondition
// (non-essential arrangement, prime too small, disconnected graph, ...).
class precondition_error : public error
{
public:
    using error::error;
    exit_code code() const noexcept override { return exit_code::precondition; }
};

// An enumeration would exceed the configured work or size budget.
class budget_error : public error
{
public:
    using error::error;
    exit_code code() const noexcept override { return exit_code::budget; }
};

// A result that is guaranteed by theory failed to materialize, e.g. a
// denominator that must clear exactly did not.
class invariant_error : public error
{
public:
    using error::error;
    exit_code code() const noexcept override { return exit_code::invariant; }
};

// Denominator outside the supported (q^a - t) family.
class unsupported_denominator : public invariant_error
{
public:
    using invariant_error::invariant_error;
};

} // namespace amz
