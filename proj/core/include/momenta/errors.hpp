#ifndef MOMENTA_ERRORS_HPP
#define MOMENTA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace momenta {

// Invalid or inconsistent input: malformed documents, violated
// preconditions, truncation overruns. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation that cannot proceed on otherwise well-formed input:
// indefinite functionals fed to reconstruction, branch ambiguities.
// The CLI maps this to exit code 3.
class ComputeError : public std::runtime_error {
 public:
  explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace momenta

#endif  // MOMENTA_ERRORS_HPP
