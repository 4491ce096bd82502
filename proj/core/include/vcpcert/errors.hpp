#ifndef VCPCERT_ERRORS_HPP
#define VCPCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vcpcert {

struct ZeroVectorError : std::invalid_argument {
  explicit ZeroVectorError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotOrthonormalError : std::invalid_argument {
  explicit NotOrthonormalError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotOrthogonalError : std::invalid_argument {
  explicit NotOrthogonalError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotUnitError : std::invalid_argument {
  explicit NotUnitError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidFrameError : std::invalid_argument {
  explicit InvalidFrameError(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateDrawError : std::runtime_error {
  explicit DegenerateDrawError(const std::string& what) : std::runtime_error(what) {}
};

struct LiftFailedError : std::runtime_error {
  explicit LiftFailedError(const std::string& what) : std::runtime_error(what) {}
};

struct WitnessMismatchError : std::runtime_error {
  explicit WitnessMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace vcpcert

#endif
