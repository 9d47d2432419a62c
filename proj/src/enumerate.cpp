#include "enumerate.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <tuple>

namespace hexaforge {

std::vector<RectRepresentation> rect_representations(const Int& size) {
  if (size < 1) throw Error(ErrorKind::argument, "size must be positive");
  std::vector<RectRepresentation> out;
  // rs(r^2-s^2) is even and at least 6, so lambda^2 <= size/6
  for (Int lambda = 1; 6 * sq(lambda) <= size; ++lambda) {
    if (size % sq(lambda) != 0) continue;
    const Int m = size / sq(lambda);
    for (Int r = 2; r * sq(r) - r <= m; ++r) {
      for (Int s = 1; s < r; ++s) {
        if (r * s * (sq(r) - sq(s)) == m) out.push_back({r, s, lambda});
      }
    }
  }
  return out;
}

std::vector<TrapRepresentation> trap_representations(const Int& size) {
  if (size < 1) throw Error(ErrorKind::argument, "size must be positive");
  std::vector<TrapRepresentation> out;
  if (size % 2 != 0) return out;
  const Int half = size / 2;
  for (Int mu = 1; 6 * sq(mu) <= half; ++mu) {
    if (half % sq(mu) != 0) continue;
    const Int m = half / sq(mu);
    for (Int p = 2; p * sq(p) - p <= m; ++p) {
      for (Int q = 1; q < p; ++q) {
        if (p * q * (sq(p) - sq(q)) == m) out.push_back({p, q, mu});
      }
    }
  }
  return out;
}

namespace {

using SizeBucket = std::vector<EnumeratedSolution>;

SizeBucket enumerate_bucket(const Int& size) {
  const auto rects = rect_representations(size);
  if (rects.empty()) return {};
  const auto traps = trap_representations(size);
  if (traps.empty()) return {};

  SizeBucket bucket;
  for (const auto& rr : rects) {
    for (const auto& tr : traps) {
      HexaSolution sol = assemble_solution(RectParams{rr.r, rr.s, rr.lambda},
                                           TrapParams{tr.p, tr.q, tr.mu});
      Provenance prov{rr.r, rr.s, rr.lambda, tr.p, tr.q, tr.mu};
      auto it = std::find_if(bucket.begin(), bucket.end(),
                             [&](const EnumeratedSolution& es) {
                               return es.solution == sol;
                             });
      if (it == bucket.end())
        bucket.push_back({sol, size, {prov}});
      else
        it->provenance.push_back(prov);
    }
  }
  std::sort(bucket.begin(), bucket.end(),
            [](const EnumeratedSolution& x, const EnumeratedSolution& y) {
              return lex_less(x.solution, y.solution);
            });
  return bucket;
}

}  // namespace

std::vector<EnumeratedSolution> enumerate_solutions(const Int& max_size,
                                                    unsigned workers) {
  if (max_size < 1) throw Error(ErrorKind::argument, "max_size must be positive");
  std::vector<Int> sizes;
  for (Int size = 60; size <= max_size; size += 60) sizes.push_back(size);

  std::vector<SizeBucket> buckets(sizes.size());
  if (workers <= 1 || sizes.size() <= 1) {
    for (std::size_t i = 0; i < sizes.size(); ++i)
      buckets[i] = enumerate_bucket(sizes[i]);
  } else {
    const unsigned n = std::min<std::size_t>(workers, sizes.size());
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < sizes.size(); i += n)
          buckets[i] = enumerate_bucket(sizes[i]);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<EnumeratedSolution> out;
  for (auto& bucket : buckets)
    for (auto& es : bucket) out.push_back(std::move(es));
  return out;
}

std::vector<EnumeratedSolution> smallest(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::argument, "k must be positive");
  Int bound = 60;
  while (true) {
    auto found = enumerate_solutions(bound);
    if (found.size() >= k) {
      found.resize(k);
      return found;
    }
    bound *= 2;
  }
}

}  // namespace hexaforge
