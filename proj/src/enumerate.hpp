#pragma once

#include <cstddef>
#include <vector>

#include "parameterize.hpp"

namespace hexaforge {

struct RectRepresentation {
  Int r, s, lambda;  // r > s >= 1, rs(r^2-s^2) lambda^2 = size
};

struct TrapRepresentation {
  Int p, q, mu;  // p > q >= 1, pq(p^2-q^2) mu^2 = size/2
};

// Complete list for the given size, ordered by (lambda, r, s).
// rs(r^2-s^2) >= r^3 - r bounds the scan.
std::vector<RectRepresentation> rect_representations(const Int& size);

// Complete list for the given size, ordered by (mu, p, q); empty for odd size.
std::vector<TrapRepresentation> trap_representations(const Int& size);

struct Provenance {
  Int r, s, lambda, p, q, mu;
};

struct EnumeratedSolution {
  HexaSolution solution;
  Int size;
  std::vector<Provenance> provenance;
};

// All canonical solutions with size <= max_size, ordered by
// (size, lexicographic sextuple).  Sizes advance in steps of 60; distinct
// parameter pairs assembling to one canonical solution are merged, keeping
// every generating pair.  Size buckets are independent, so workers > 1
// shards them across threads with identical merged output.
std::vector<EnumeratedSolution> enumerate_solutions(const Int& max_size,
                                                    unsigned workers = 1);

// First k solutions in enumeration order (bound doubles until k are found).
std::vector<EnumeratedSolution> smallest(std::size_t k);

}  // namespace hexaforge
