#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beckring {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Z0, or a quotient over Z0.
class InvalidModulusError : public Error {
public:
  using Error::Error;
};

/// A ring or product would exceed the configured element cap.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// Malformed structure-constant descriptor (missing entry, bad arity, ...).
class DescriptorError : public Error {
public:
  using Error::Error;
};

/// Structure constants that fail a ring axiom. The message names the triple.
class NotARingError : public Error {
public:
  using Error::Error;
};

/// Element index out of range for its ring.
class ElementError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A witness handed to an operation violates its contract
/// (improper coloring, non-clique, ...).
class ContractError : public Error {
public:
  using Error::Error;
};

/// Ring-expression syntax or semantic failure. `offset` is the byte offset
/// into the source text where the problem was detected.
class ParseError : public Error {
public:
  enum class Kind { syntax, invalid_modulus, unsupported };

  ParseError(Kind kind, std::size_t offset, const std::string &what)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        kind_(kind), offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

private:
  Kind kind_;
  std::size_t offset_;
};

/// A solver ran out of its time budget. Carries the certified interval
/// [lower, upper] established before the deadline.
class BudgetError : public Error {
public:
  BudgetError(const std::string &what, std::size_t lower, std::size_t upper)
      : Error(what + " (certified interval [" + std::to_string(lower) + ", " +
              std::to_string(upper) + "])"),
        lower_(lower), upper_(upper) {}

  std::size_t lower() const noexcept { return lower_; }
  std::size_t upper() const noexcept { return upper_; }

private:
  std::size_t lower_;
  std::size_t upper_;
};

/// Raised when a verified construction fails its own post-check. Never
/// expected to fire.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace beckring
