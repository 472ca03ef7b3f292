#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace adq {

enum class Errc {
  Input,
  CapExceeded,
  InvalidGenerator,
  NotSemisimple,
  NotCoprime,
  NotCommuting,
  EigenvaluesNotRational,
  ResidueNotSemisimple,
  RandomnessExhausted,
  SubsetBudgetExceeded,
  ResidueCondition,
  AmbientMismatch,
  OrderCap,
  Invariant,
};

const char *errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string &msg, std::uint64_t partial = 0);
  Errc code() const { return code_; }
  // Element count reached before a cap fired; 0 otherwise.
  std::uint64_t partial() const { return partial_; }

private:
  Errc code_;
  std::uint64_t partial_;
};

// Seeded generator used everywhere; mt19937_64 output is fixed by the standard,
// and we avoid std::uniform_int_distribution so streams match across libstdc++/libc++.
using Rng = std::mt19937_64;
inline std::uint64_t below(Rng &r, std::uint64_t n) { return n ? r() % n : 0; }

} // namespace adq
