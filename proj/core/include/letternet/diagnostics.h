#ifndef LETTERNET_DIAGNOSTICS_H_
#define LETTERNET_DIAGNOSTICS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace letternet {

// Fatal, user-facing error (bad input file, invalid configuration, ...).
// The message is meant to be printed as is.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Collects recoverable warnings. Operations that can degrade gracefully take
// an optional Diagnostics* and keep going; the caller decides where the
// warnings end up (the CLI prints them on stderr).
class Diagnostics {
 public:
  void warn(std::string message);
  void merge(const Diagnostics& other);

  const std::vector<std::string>& warnings() const { return warnings_; }
  bool empty() const { return warnings_.empty(); }

 private:
  std::vector<std::string> warnings_;
};

// Records into `diag` when it is non-null.
void warn(Diagnostics* diag, std::string message);

}  // namespace letternet

#endif  // LETTERNET_DIAGNOSTICS_H_
