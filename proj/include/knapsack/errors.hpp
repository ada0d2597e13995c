#pragma once

#include <stdexcept>
#include <string>

namespace knapsack {

/// A caller broke a documented precondition that the library could detect.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A lookup (e.g. a generator chain for a non-member) found nothing.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base-set construction could not cover some profit value.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(double profit, const std::string& what)
      : std::runtime_error(what), profit_(profit) {}
  double profit() const { return profit_; }

 private:
  double profit_;
};

/// An exact oracle declined an input outside its size guard.
class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace knapsack
