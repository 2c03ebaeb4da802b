#pragma once

#include <stdexcept>
#include <string>

namespace cutlab {

// Single exception type; the code distinguishes contract violations from
// resource caps so the C API can map them to distinct statuses.
class Error : public std::runtime_error {
 public:
  enum class Code { domain, cap, unbounded, infeasible, parse, internal };

  Error(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
  Code code;
};

inline Error domain_error(const std::string& msg) { return {Error::Code::domain, msg}; }
inline Error cap_error(const std::string& msg) { return {Error::Code::cap, msg}; }
inline Error parse_error(const std::string& msg) { return {Error::Code::parse, msg}; }

}  // namespace cutlab
