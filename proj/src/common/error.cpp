#include "adq/error.hpp"

namespace adq {

const char *errc_name(Errc c) {
  switch (c) {
  case Errc::Input: return "INPUT_ERROR";
  case Errc::CapExceeded: return "CAP_EXCEEDED";
  case Errc::InvalidGenerator: return "INVALID_GENERATOR";
  case Errc::NotSemisimple: return "NOT_SEMISIMPLE";
  case Errc::NotCoprime: return "NOT_COPRIME";
  case Errc::NotCommuting: return "NOT_COMMUTING";
  case Errc::EigenvaluesNotRational: return "EIGENVALUES_NOT_RATIONAL";
  case Errc::ResidueNotSemisimple: return "RESIDUE_NOT_SEMISIMPLE";
  case Errc::RandomnessExhausted: return "RANDOMNESS_EXHAUSTED";
  case Errc::SubsetBudgetExceeded: return "SUBSET_BUDGET_EXCEEDED";
  case Errc::ResidueCondition: return "RESIDUE_CONDITION";
  case Errc::AmbientMismatch: return "AMBIENT_MISMATCH";
  case Errc::OrderCap: return "ORDER_CAP";
  case Errc::Invariant: return "INVARIANT_VIOLATION";
  }
  return "UNKNOWN";
}

Error::Error(Errc c, const std::string &msg, std::uint64_t partial)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c), partial_(partial) {}

} // namespace adq
