/* SPDX-License-Identifier: Apache-2.0 */

#ifndef VOLTRACE_ERRORS_H
#define VOLTRACE_ERRORS_H

#include <stdexcept>
#include <string>

namespace voltrace {

/// Error category, mapped to distinct CLI exit codes.
enum class errc {
  config,        // bad option / unknown profile or device
  io,            // missing or unreadable file
  schema,        // malformed record or database entry
  mismatch,      // profile/device/trace inconsistency
  insufficient,  // not enough observations to act
  domain,        // precondition violation (zero period, underflow, ...)
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

} // namespace voltrace

#endif // VOLTRACE_ERRORS_H
