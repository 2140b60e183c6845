#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixcurve {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise malformed argument at an API boundary.
class InputError : public Error {
 public:
  using Error::Error;
};

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the last character
};

class LexError : public Error {
 public:
  LexError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, SourceSpan span)
      : Error(what + " at " + std::to_string(span.begin) + ".." + std::to_string(span.end)),
        span_(span) {}
  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

/// A partial function (sqrt, ln, division, real power) evaluated on its singular set.
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownCurve : public Error {
 public:
  using Error::Error;
};

/// The base curve has (numerically) vanishing velocity.
class RegularityError : public Error {
 public:
  using Error::Error;
};

class EvoluteUndefined : public Error {
 public:
  using Error::Error;
};

class LightlikeDerivativeUndefined : public Error {
 public:
  using Error::Error;
};

/// The requested quantity does not exist for this configuration (asymptotic contrapedal).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class LightlikeLine : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class Divergent : public Error {
 public:
  using Error::Error;
};

}  // namespace mixcurve
