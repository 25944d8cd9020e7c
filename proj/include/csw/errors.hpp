#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace csw {

// Error taxonomy shared by the library and the CLI. `code` is the stable
// machine-readable identifier the tool prints on stderr.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// An argument violated an operation's contract.
class UsageError : public Error {
public:
  explicit UsageError(const std::string& msg) : Error("usage", msg) {}
};

// Input files disagree with each other or with their declared shape.
class StructureError : public Error {
public:
  explicit StructureError(const std::string& msg) : Error("structure", msg) {}
};

// A single line or field could not be parsed.
class FormatError : public Error {
public:
  explicit FormatError(const std::string& msg) : Error("format", msg) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error("io", msg) {}
};

}  // namespace csw
