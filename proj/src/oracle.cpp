#include "utsolve/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <thread>

namespace utsolve {

std::optional<std::uint64_t> group_order(Residue p, int m) {
  std::uint64_t order = 1;
  const long long positions = static_cast<long long>(m) * (m - 1) / 2;
  for (long long k = 0; k < positions; ++k) {
    if (order > std::numeric_limits<std::uint64_t>::max() / p) return std::nullopt;
    order *= p;
  }
  return order;
}

GroupElement element_at(Residue p, int m, std::uint64_t index) {
  AlgebraElement u(p, m);
  // Last position is the least significant digit.
  for (int i = m - 2; i >= 0 && index > 0; --i) {
    for (int j = m - 1; j > i && index > 0; --j) {
      u.set(i, j, static_cast<long long>(index % p));
      index /= p;
    }
  }
  return GroupElement(std::move(u));
}

Enumeration enumerate(Residue p, int m, std::uint64_t cap) {
  const auto order = group_order(p, m);
  if (!order || *order > cap) {
    throw CapExceeded("UT_" + std::to_string(m) + "(F_" + std::to_string(p) + ") has more than " +
                      std::to_string(cap) + " elements");
  }
  return Enumeration(p, m, *order);
}

std::optional<GroupElement> brute_solve(const SearchSpec& spec) {
  const Word& w = spec.word;
  const Residue p = w.p;
  const int m = spec.lift ? spec.lift->m : w.n;
  const CoefficientTable resolved = spec.lift ? lift_coefficients(w.coefficients, *spec.lift) : w.coefficients;
  auto solves = [&](const GroupElement& x) { return evaluate_resolved(w, resolved, x).is_identity(); };

  if (spec.mode == SearchMode::Random) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<Residue> coeff(0, p - 1);
    for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
      AlgebraElement u(p, m);
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) u.set(i, j, coeff(rng));
      }
      GroupElement x(std::move(u));
      if (solves(x)) return x;
    }
    return std::nullopt;
  }

  const std::uint64_t size = enumerate(p, m, spec.cap).size();
  const unsigned workers = std::max(1U, std::min<unsigned>(spec.threads, static_cast<unsigned>(std::min<std::uint64_t>(size, 64))));
  std::atomic<std::uint64_t> best{size};
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi && k < best.load(std::memory_order_relaxed); ++k) {
      if (solves(element_at(p, m, k))) {
        std::uint64_t current = best.load();
        while (k < current && !best.compare_exchange_weak(current, k)) {
        }
        return;
      }
    }
  };
  if (workers == 1) {
    scan(0, size);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (size + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      const std::uint64_t lo = t * chunk;
      pool.emplace_back(scan, lo, std::min(size, lo + chunk));
    }
  }
  if (best.load() == size) return std::nullopt;
  return element_at(p, m, best.load());
}

}  // namespace utsolve
