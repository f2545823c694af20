#ifndef MULTSUB_ERRORS_HPP
#define MULTSUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multsub {

/// Bad argument to a public operation (non-prime p, n = 0, odd k, ...).
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures that are not caller mistakes.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class enumeration_too_large : public error {
 public:
  using error::error;
};

class oracle_too_large : public error {
 public:
  using error::error;
};

class resource_error : public error {
 public:
  using error::error;
};

class construction_failed : public error {
 public:
  using error::error;
};

/// A proven invariant was violated; always an implementation bug.
class internal_consistency_error : public error {
 public:
  using error::error;
};

}  // namespace multsub

#endif  // MULTSUB_ERRORS_HPP
