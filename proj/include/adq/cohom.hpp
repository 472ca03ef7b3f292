#pragma once

#include <cstdint>

#include "adq/repmod.hpp"

namespace adq {

/// dim H^0(G, M).
int h0_dim(const GModule &M);
/// dim H^1(G, M) from cocycle constraints on a spanning tree of the Cayley graph of a small
/// generating set; stops early once the constraints force Z^1 = B^1.
int h1_dim(const GModule &M, std::uint64_t seed = 1);
/// dim H^1(G, M) from the cocycle identity over all pairs, one unknown vector per element.
/// Throws Errc::OrderCap above max_order.
int h1_bruteforce(const GModule &M, std::uint64_t max_order = 300);

} // namespace adq
