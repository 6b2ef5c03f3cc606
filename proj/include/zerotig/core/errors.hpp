#pragma once

#include <stdexcept>
#include <string>

namespace zerotig {

// Base class for every error raised by the library. The CLI maps these to
// exit code 1 with a one-line diagnostic.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingPath : Error {
  explicit MissingPath(const std::string& path)
      : Error("missing or empty path: " + path) {}
};

struct UnreadableFrame : Error {
  explicit UnreadableFrame(const std::string& name, const std::string& why)
      : Error("unreadable frame '" + name + "': " + why) {}
};

struct InconsistentDimensions : Error {
  InconsistentDimensions(const std::string& a, const std::string& b)
      : Error("frame dimensions differ between '" + a + "' and '" + b + "'") {}
};

struct UnwritablePath : Error {
  explicit UnwritablePath(const std::string& path)
      : Error("cannot write to: " + path) {}
};

struct ConfigMismatch : Error {
  ConfigMismatch(const std::string& expected, const std::string& got)
      : Error("checkpoint config hash " + got + " does not match active config " +
              expected) {}
};

struct CorruptCheckpoint : Error {
  explicit CorruptCheckpoint(const std::string& why)
      : Error("corrupt checkpoint: " + why) {}
};

struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& why) : Error("degenerate input: " + why) {}
};

struct BackendFailure : Error {
  explicit BackendFailure(const std::string& detail)
      : Error("flow backend failure: " + detail) {}
};

struct NonFiniteLoss : Error {
  NonFiniteLoss(long step, const std::string& report_dump)
      : Error("non-finite loss at step " + std::to_string(step) + "\n" + report_dump) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

}  // namespace zerotig
