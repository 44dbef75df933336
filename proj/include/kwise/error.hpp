#ifndef KWISE_ERROR_HPP
#define KWISE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kwise {

enum class ErrorCode {
  kInvalidArgument,  // precondition violated or malformed request
  kParse,            // malformed rational string or measure document
  kGuard,            // size guard exceeded (atomic n, full-LP row count)
  kInfeasible,       // LP infeasible where feasibility is guaranteed: builder bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace kwise

#endif
