#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bitri {

// Raised when an enumeration would produce more candidates than the active cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// Structural problem in an input document; path is a JSON pointer.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// An operation was called on data that does not meet its contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Limits {
  std::size_t cap = 50000;
};

Limits default_limits();
void set_default_cap(std::size_t cap);

inline void charge(std::size_t produced, const Limits& lim, const char* what) {
  if (produced > lim.cap) throw CapExceeded(what, lim.cap);
}

struct Finding {
  std::string rule;
  std::string detail;
  std::vector<int> witness;
};

// Validation result. An empty report means the checked value is valid.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  void fail(std::string rule, std::string detail, std::vector<int> witness = {});
  void absorb(const Report& other, const std::string& prefix = {});

  bool ok() const { return findings_.empty(); }
  const std::vector<Finding>& findings() const { return findings_; }
  const std::string& subject() const { return subject_; }
  bool mentions(const std::string& rule) const;
  std::string summary() const;

 private:
  std::string subject_;
  std::vector<Finding> findings_;
};

}  // namespace bitri
