#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vatwist {

enum class ErrorKind {
  InvalidInput,
  NotASublattice,
  NotTorsion,
  ValueNotTorsionOfOrderN,
  ResourceBound,
  RankMismatch,
  NotCentral,
  IrrationalCocycle,
  NotInU,
  NoSolution,
  DecompositionFailed,
  NotSkew,
  Unsupported,
  InvalidGroup,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotASublattice: return "NotASublattice";
    case ErrorKind::NotTorsion: return "NotTorsion";
    case ErrorKind::ValueNotTorsionOfOrderN: return "ValueNotTorsionOfOrderN";
    case ErrorKind::ResourceBound: return "ResourceBound";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::IrrationalCocycle: return "IrrationalCocycle";
    case ErrorKind::NotInU: return "NotInU";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
  }
  return "Unknown";
}

/// Every library failure is reported through this type; `kind()` is what the
/// CLI serializes into the structured error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vatwist
