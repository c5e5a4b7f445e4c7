#pragma once

#include <stdexcept>
#include <string>

namespace ehrq {

struct NotInvertible : std::domain_error {
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct InvalidArgs : std::invalid_argument {
  explicit InvalidArgs(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidType : std::invalid_argument {
  explicit InvalidType(const std::string& what) : std::invalid_argument(what) {}
};

struct NotNormalized : std::invalid_argument {
  explicit NotNormalized(const std::string& what) : std::invalid_argument(what) {}
};

struct SmoothPoint : std::invalid_argument {
  explicit SmoothPoint(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ehrq
