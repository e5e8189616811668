#pragma once

#include <stdexcept>
#include <string>

namespace frag {

enum class Errc {
  MalformedDump,
  EmptyDump,
  FixtureFormat,
  InsufficientData,
  DegenerateProfile,
  Convergence,
  InvalidProfile,
  ProfileFile,
  SeriesMismatch,
  Bounds,
  Config,
  DegenerateCorrelation,
  Io,
};

// Input/usage errors. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// A violated internal invariant, as opposed to bad input. Exit status 2.
class InternalError : public std::logic_error {
  using std::logic_error::logic_error;
};

inline void check_internal(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}

}  // namespace frag
