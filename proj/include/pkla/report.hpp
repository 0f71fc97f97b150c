#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pkla {

/// One failed identity with the basis indices where it failed and both sides.
struct Violation {
  std::string rule;
  std::vector<std::size_t> indices;
  std::string lhs;
  std::string rhs;

  std::string describe() const;
};

class ValidationReport {
 public:
  bool ok() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const std::vector<Violation>& items() const { return items_; }
  std::size_t count(const std::string& rule) const;

  void add(Violation v) { items_.push_back(std::move(v)); }
  void add(std::string rule, std::vector<std::size_t> idx, std::string lhs = {}, std::string rhs = {}) {
    items_.push_back({std::move(rule), std::move(idx), std::move(lhs), std::move(rhs)});
  }
  void merge(const ValidationReport& other, const std::string& prefix = {});

  std::string to_string() const;

 private:
  std::vector<Violation> items_;
};

/// An identity that a theorem guarantees has failed; carries a witness.
/// Seeing this means a bug, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, ValidationReport report = {})
      : std::invalid_argument(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace pkla
