#include "bitri/error.hpp"

#include <atomic>
#include <sstream>

namespace bitri {

namespace {
std::atomic<std::size_t> g_cap{50000};
}

CapExceeded::CapExceeded(const std::string& what, std::size_t cap)
    : std::runtime_error("size cap exceeded (" + std::to_string(cap) + ") while enumerating " + what),
      cap_(cap) {}

SchemaError::SchemaError(std::string path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

Limits default_limits() { return Limits{g_cap.load()}; }
void set_default_cap(std::size_t cap) { g_cap.store(cap); }

void Report::fail(std::string rule, std::string detail, std::vector<int> witness) {
  findings_.push_back({std::move(rule), std::move(detail), std::move(witness)});
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const auto& f : other.findings_) {
    findings_.push_back({prefix.empty() ? f.rule : prefix + "." + f.rule, f.detail, f.witness});
  }
}

bool Report::mentions(const std::string& rule) const {
  for (const auto& f : findings_) {
    if (f.rule == rule || f.rule.ends_with("." + rule)) return true;
  }
  return false;
}

std::string Report::summary() const {
  std::ostringstream out;
  if (!subject_.empty()) out << subject_ << ": ";
  if (ok()) {
    out << "ok";
    return out.str();
  }
  out << findings_.size() << " violation(s)";
  for (const auto& f : findings_) {
    out << "\n  " << f.rule << ": " << f.detail;
    if (!f.witness.empty()) {
      out << " [";
      for (std::size_t i = 0; i < f.witness.size(); ++i) out << (i ? "," : "") << f.witness[i];
      out << "]";
    }
  }
  return out.str();
}

}  // namespace bitri
