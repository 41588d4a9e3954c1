#pragma once

#include <stdexcept>
#include <string>

namespace admcm {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (CLI exit code 3).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured budget was exceeded. Never means "no answer exists".
class ResourceError : public Error {
 public:
  ResourceError(std::string budget, std::size_t limit)
      : Error("budget '" + budget + "' exceeded (limit " + std::to_string(limit) + ")"),
        budget_(std::move(budget)),
        limit_(limit) {}

  const std::string& budget() const noexcept { return budget_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string budget_;
  std::size_t limit_;
};

/// A cover-transformation lemma was called outside its hypotheses.
class LemmaHypothesisError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. For the cover lemmas this means the
/// instance handed in was not genuinely admissible.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A cover does not meet every matching block exactly once.
class ShapeError : public InputError {
 public:
  ShapeError(int block, const std::string& what)
      : InputError("block " + std::to_string(block) + ": " + what), block_(block) {}

  /// 1-based index of the first failing matching block.
  int block() const noexcept { return block_; }

 private:
  int block_;
};

}  // namespace admcm
