#ifndef RANK3_ERRORS_HPP
#define RANK3_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rank3 {

// Input that violates the rank-3 model (edge arity, out-of-range ids, duplicate labels).
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Edge of cardinality > 3.
class RankError : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WrongPlayer : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidRestriction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested a move from a position where the side to move has none to make.
class NoMove : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Refusal from a brute-force routine whose input exceeds its configured bound.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public MalformedInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : MalformedInput("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rank3

#endif  // RANK3_ERRORS_HPP
