// Error type shared by all rdna modules. Carries a coarse category that the
// C API maps onto status codes.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rdna {

enum class errc {
  invalid_argument,
  parse,
  io,
  simulation,
};

class error : public std::runtime_error {
 public:
  error(errc code, std::string message) : std::runtime_error(std::move(message)), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) { throw error(code, message); }

}  // namespace rdna
