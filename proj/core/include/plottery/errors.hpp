#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plottery {

/// Base of every error the workbench raises. Verdicts (invalid proof,
/// rejected certificate) are values, not errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A natural number is not the code of any word: its base-17 expansion
/// contains a zero digit, or it is 0.
class NotInGamma : public Error {
 public:
  explicit NotInGamma(const std::string& what) : Error(what) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        message_(message),
        position_(position) {}

  const std::string& message() const { return message_; }
  std::size_t position() const { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

class MalformedProofWord : public Error {
 public:
  explicit MalformedProofWord(const std::string& what) : Error(what) {}
};

class InvalidProof : public Error {
 public:
  explicit InvalidProof(const std::string& what) : Error(what) {}
};

class UnsupportedFormula : public Error {
 public:
  explicit UnsupportedFormula(const std::string& what) : Error(what) {}
};

/// Requested digits lie beyond what a digit source holds.
class CacheExhausted : public Error {
 public:
  CacheExhausted(std::string requested, std::size_t available)
      : Error("digit range ending at " + requested +
              " exceeds cache of " + std::to_string(available) + " digits"),
        requested_(std::move(requested)),
        available_(available) {}

  const std::string& requested() const { return requested_; }
  std::size_t available() const { return available_; }

 private:
  std::string requested_;
  std::size_t available_;
};

/// An enumerated Psi stream ran past its code bound.
class ExhaustedBound : public Error {
 public:
  explicit ExhaustedBound(const std::string& what) : Error(what) {}
};

/// Certificate stage ii could not place a proof that passed stage i in the
/// supplied stream; the stream and the input disagree.
class StreamExhausted : public Error {
 public:
  explicit StreamExhausted(const std::string& what) : Error(what) {}
};

class ResourceBudgetExceeded : public Error {
 public:
  ResourceBudgetExceeded(const std::string& what, std::string attempted)
      : Error(what), attempted_(std::move(attempted)) {}

  const std::string& attempted() const { return attempted_; }

 private:
  std::string attempted_;
};

/// A persisted artifact (cache, registry, Psi file) failed validation.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(what) {}
};

}  // namespace plottery
