#ifndef ODDCHAIN_ERROR_HPP
#define ODDCHAIN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddchain {

/// Base of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes (rank mismatch, wrong nesting).
struct ShapeError : Error {
  using Error::Error;
};

/// An element is not in the carrier of the algebra it was handed to.
struct MembershipError : Error {
  using Error::Error;
};

/// succ/pred requested on a densely ordered or trivial group.
struct NotDiscretelyOrdered : Error {
  using Error::Error;
};

/// The element has no unique cover inside the group part.
struct UndefinedCover : Error {
  using Error::Error;
};

/// A construction hypothesis failed. `clause()` names the failed condition.
class PreconditionViolation : public Error {
public:
  explicit PreconditionViolation(std::string clause, std::string context = {})
      : Error(context.empty() ? clause : context + ": " + clause),
        clause_(std::move(clause)) {}

  const std::string &clause() const noexcept { return clause_; }

private:
  std::string clause_;
};

/// between() was asked for a witness in an order that has covers.
struct NotDense : Error {
  using Error::Error;
};

/// Exact arithmetic left the 64-bit range.
struct OverflowError : Error {
  using Error::Error;
};

/// Malformed literal or formula text; `position()` is a 0-based offset.
class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

/// Invalid user input that is not a parse failure (bad field values, ...).
struct ValidationError : Error {
  using Error::Error;
};

} // namespace oddchain

#endif // ODDCHAIN_ERROR_HPP
