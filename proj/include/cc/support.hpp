#ifndef CC_SUPPORT_HPP
#define CC_SUPPORT_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace cc {

// Base class for precondition violations surfaced through the C++ API.
// Analysis results that are expected to fail (type errors, diagnostics,
// decode failures) are returned as values instead.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UnboundVariableError : public Error {
public:
  using Error::Error;
};

class DuplicateDefinitionError : public Error {
public:
  using Error::Error;
};

class UnknownNameError : public Error {
public:
  using Error::Error;
};

class NotAMuError : public Error {
public:
  using Error::Error;
};

class ArityMismatchError : public Error {
public:
  using Error::Error;
};

class ConstructorMismatchError : public Error {
public:
  using Error::Error;
};

// Minimal result type: a value or an error, never both.
template <typename T, typename E>
class Expected {
public:
  Expected(T value) : data_(std::in_place_index<0>, std::move(value)) {}
  Expected(E error) : data_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const { return data_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const { return std::get<0>(data_); }
  T& value() { return std::get<0>(data_); }
  const E& error() const { return std::get<1>(data_); }

private:
  std::variant<T, E> data_;
};

}  // namespace cc

#endif
