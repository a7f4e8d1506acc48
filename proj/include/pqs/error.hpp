#ifndef PQS_ERROR_HPP
#define PQS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pqs {

// Error categories map directly onto CLI exit codes.
enum class ErrorKind {
  validation = 1,     // bad input (non-bijective generator, product != 1, ...)
  resource = 2,       // a configured cap was exceeded
  inconsistency = 3,  // internal cross-check failed (e.g. Noether integrality)
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& msg) {
  throw Error(ErrorKind::validation, msg);
}
[[noreturn]] inline void fail_resource(const std::string& msg) {
  throw Error(ErrorKind::resource, msg);
}
[[noreturn]] inline void fail_inconsistency(const std::string& msg) {
  throw Error(ErrorKind::inconsistency, msg);
}

}  // namespace pqs

#endif
