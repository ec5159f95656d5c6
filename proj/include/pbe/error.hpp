#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedSecurityLevel : public Error {
 public:
  explicit UnsupportedSecurityLevel(unsigned level)
      : Error("unsupported security level: " + std::to_string(level)) {}
};

class PlaintextTooLong : public Error {
 public:
  PlaintextTooLong(std::size_t got, std::size_t limit)
      : Error("plaintext too long: " + std::to_string(got) + " > " + std::to_string(limit)) {}
};

/// Structurally invalid input to a primitive. Distinct from a decryption
/// failure, which is reported as an empty optional.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class OtsKeyReuse : public Error {
 public:
  OtsKeyReuse() : Error("one-time signing key already used") {}
};

class InvalidRecipientSet : public Error {
 public:
  using Error::Error;
};

class CryptoBackendError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { truncated, trailing_bytes, bad_magic, unknown_tag, bad_value };

  ParseError(Kind kind, std::size_t offset, const std::string& detail = {})
      : Error(describe(kind, offset, detail)), kind_(kind), offset_(offset) {}

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  static std::string describe(Kind kind, std::size_t offset, const std::string& detail) {
    std::string what;
    switch (kind) {
      case Kind::truncated: what = "truncated input"; break;
      case Kind::trailing_bytes: what = "trailing bytes"; break;
      case Kind::bad_magic: what = "bad magic"; break;
      case Kind::unknown_tag: what = "unknown tag"; break;
      case Kind::bad_value: what = "invalid field"; break;
    }
    what += " at offset " + std::to_string(offset);
    if (!detail.empty()) what += ": " + detail;
    return what;
  }

  Kind kind_;
  std::size_t offset_;
};

}  // namespace pbe
