#include "pkla/report.hpp"

#include <sstream>

namespace pkla {

std::string Violation::describe() const {
  std::ostringstream os;
  os << rule;
  if (!indices.empty()) {
    os << " at (";
    for (std::size_t k = 0; k < indices.size(); ++k) os << (k ? "," : "") << indices[k];
    os << ")";
  }
  if (!lhs.empty() || !rhs.empty()) os << ": " << lhs << " != " << rhs;
  return os.str();
}

std::size_t ValidationReport::count(const std::string& rule) const {
  std::size_t n = 0;
  for (const auto& v : items_)
    if (v.rule == rule) ++n;
  return n;
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (auto v : other.items_) {
    if (!prefix.empty()) v.rule = prefix + v.rule;
    items_.push_back(std::move(v));
  }
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid\n";
  std::ostringstream os;
  os << items_.size() << " violation(s)\n";
  for (const auto& v : items_) os << "  " << v.describe() << "\n";
  return os.str();
}

}  // namespace pkla
