#include "tperm/error.hpp"

namespace tperm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateResidue: return "DuplicateResidue";
    case ErrorKind::NotAWindowPermutation: return "NotAWindowPermutation";
    case ErrorKind::BadPeriod: return "BadPeriod";
    case ErrorKind::PeriodMismatch: return "PeriodMismatch";
    case ErrorKind::ShiftMismatch: return "ShiftMismatch";
    case ErrorKind::NotSubmodular: return "NotSubmodular";
    case ErrorKind::BadAsymptotics: return "BadAsymptotics";
    case ErrorKind::InconsistentPeriod: return "InconsistentPeriod";
    case ErrorKind::EmptySequence: return "EmptySequence";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoUniqueMax: return "NoUniqueMax";
    case ErrorKind::ShiftNonzero: return "ShiftNonzero";
    case ErrorKind::ShiftSumMismatch: return "ShiftSumMismatch";
    case ErrorKind::BadParameters: return "BadParameters";
  }
  return "UnknownError";
}

}  // namespace tperm
