#ifndef RWAP_ERROR_H_
#define RWAP_ERROR_H_

#include <stdexcept>
#include <string>

namespace rwap {

// Malformed instance, solution, or graph input (file or in-memory).
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bit vector whose length does not match the instance variable count.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration requested on an instance above the configured cap.
class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// M is undefined: no request has both a working and a protection lightpath.
class UndefinedMError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter combination the operation cannot honor (density, budget, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rwap

#endif  // RWAP_ERROR_H_
