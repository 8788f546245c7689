#pragma once

#include <stdexcept>
#include <string>

namespace kv {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// Malformed input, shape mismatch or unknown name.
struct InputError : Error {
	using Error::Error;
};

/// A cochain space would exceed the configured entry budget.
struct BudgetError : Error {
	using Error::Error;
};

/// An algebraic precondition failed; the message carries the witness.
struct Rejected : Error {
	using Error::Error;
};

} // namespace kv
