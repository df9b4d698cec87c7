#pragma once

#include <stdexcept>
#include <string>

namespace kml {

/// Base class for every error raised by the library. `code()` is a stable
/// machine-readable tag that the CLI copies into reports.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define KML_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

KML_DEFINE_ERROR(RingMismatch)
KML_DEFINE_ERROR(DimensionMismatch)
KML_DEFINE_ERROR(NotAComplex)
KML_DEFINE_ERROR(AmbientMismatch)
KML_DEFINE_ERROR(NotInSpan)
KML_DEFINE_ERROR(InvalidCube)
KML_DEFINE_ERROR(UnknownDirection)
KML_DEFINE_ERROR(BoundExceeded)
KML_DEFINE_ERROR(InvalidGradedModule)
KML_DEFINE_ERROR(WindowTooSmall)
KML_DEFINE_ERROR(NotTRegular)
KML_DEFINE_ERROR(NotNil)
KML_DEFINE_ERROR(NotNilpotent)
KML_DEFINE_ERROR(InvalidAffineObject)
KML_DEFINE_ERROR(InvalidFiltration)
KML_DEFINE_ERROR(NotExact)

#undef KML_DEFINE_ERROR

/// Input document violation; `path()` is a JSON-pointer-like location.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error("SchemaError", (path.empty() ? std::string("/") : path) + ": " + what),
        path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace kml
