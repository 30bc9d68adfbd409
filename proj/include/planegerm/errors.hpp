#pragma once

#include <stdexcept>
#include <string>

namespace planegerm {

class InsufficientOrder : public std::runtime_error {
 public:
  InsufficientOrder(int needed, const std::string& what)
      : std::runtime_error("insufficient order: " + what + " needs order >= " + std::to_string(needed)),
        needed_(needed) {}
  int needed() const { return needed_; }

 private:
  int needed_;
};

// Substitution of a series with nonzero constant term.
class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class NotAUnit : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class NotInvertible : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class NotApplicable : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ContractViolation : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace planegerm
