#pragma once

#include <stdexcept>
#include <string>

namespace sss {

enum class Errc {
  // container / header
  BadMagic,
  BadVersion,
  UnknownScheme,
  BadIndex,
  // kernels
  InvalidPair,
  NonResidue,
  RandomOutOfRange,
  // combine
  SchemeMismatch,
  DuplicateIndex,
  LengthMismatch,
  CrcMismatch,
  IoError,
  // shamir
  BadParams,
  DuplicateX,
  // dispersal
  EndpointCountMismatch,
  EndpointUnreachable,
  PartialWrite,
  InsufficientShares,
  BindFailure,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadMagic: return "BadMagic";
    case Errc::BadVersion: return "BadVersion";
    case Errc::UnknownScheme: return "UnknownScheme";
    case Errc::BadIndex: return "BadIndex";
    case Errc::InvalidPair: return "InvalidPair";
    case Errc::NonResidue: return "NonResidue";
    case Errc::RandomOutOfRange: return "RandomOutOfRange";
    case Errc::SchemeMismatch: return "SchemeMismatch";
    case Errc::DuplicateIndex: return "DuplicateIndex";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::CrcMismatch: return "CrcMismatch";
    case Errc::IoError: return "IoError";
    case Errc::BadParams: return "BadParams";
    case Errc::DuplicateX: return "DuplicateX";
    case Errc::EndpointCountMismatch: return "EndpointCountMismatch";
    case Errc::EndpointUnreachable: return "EndpointUnreachable";
    case Errc::PartialWrite: return "PartialWrite";
    case Errc::InsufficientShares: return "InsufficientShares";
    case Errc::BindFailure: return "BindFailure";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sss
