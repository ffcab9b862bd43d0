#pragma once

#include <stdexcept>
#include <string>

namespace heckerep {

struct PoleAtRoot : std::domain_error {
  explicit PoleAtRoot(const std::string& what) : std::domain_error(what) {}
};

struct NotAdmissible : std::domain_error {
  explicit NotAdmissible(const std::string& what) : std::domain_error(what) {}
};

struct NotInteger : std::domain_error {
  explicit NotInteger(const std::string& what) : std::domain_error(what) {}
};

struct NonMonic : std::domain_error {
  explicit NonMonic(const std::string& what) : std::domain_error(what) {}
};

struct NotApplicable : std::domain_error {
  explicit NotApplicable(const std::string& what) : std::domain_error(what) {}
};

struct NotPrimitive : std::domain_error {
  explicit NotPrimitive(const std::string& what) : std::domain_error(what) {}
};

struct NotPositive : std::domain_error {
  explicit NotPositive(const std::string& what) : std::domain_error(what) {}
};

struct FieldMismatch : std::invalid_argument {
  explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace heckerep
