#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

#include "ewt/verdict.hpp"

namespace ewt {

enum class Exec { Serial, Parallel };

/// Checks indices 0..n-1 and aggregates: the lowest failing index wins,
/// else the lowest unknown index, else holds. Both variants return the same
/// verdict for the same inputs.
template <class F>
Verdict verify_all_serial(std::size_t n, F&& check) {
  Verdict first_unknown;
  bool have_unknown = false;
  for (std::size_t i = 0; i < n; ++i) {
    Verdict v = check(i);
    if (v.failed()) return v;
    if (v.is_unknown() && !have_unknown) {
      first_unknown = std::move(v);
      have_unknown = true;
    }
  }
  return have_unknown ? first_unknown : Verdict::holds();
}

template <class F>
Verdict verify_all_parallel(std::size_t n, F&& check) {
  std::vector<Verdict> out(n);
  std::vector<char> done(n, 0);
  std::atomic<std::size_t> first_fail{n};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    std::size_t i = static_cast<std::size_t>(k);
    if (i > first_fail.load(std::memory_order_relaxed)) continue;
    out[i] = check(i);
    done[i] = 1;
    if (out[i].failed()) {
      std::size_t cur = first_fail.load();
      while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
      }
    }
  }
  // Indices below the first failure were all evaluated.
  std::size_t ff = first_fail.load();
  if (ff < n) return out[ff];
  for (std::size_t i = 0; i < n; ++i)
    if (done[i] && out[i].is_unknown()) return out[i];
  return Verdict::holds();
}

template <class F>
Verdict verify_all(Exec e, std::size_t n, F&& check) {
  return e == Exec::Parallel && n > 1 ? verify_all_parallel(n, check) : verify_all_serial(n, check);
}

/// Lowest index i < n with pred(i) true.
template <class F>
std::optional<std::size_t> first_holding_serial(std::size_t n, F&& pred) {
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

template <class F>
std::optional<std::size_t> first_holding_parallel(std::size_t n, F&& pred) {
  std::atomic<std::size_t> best{n};
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    std::size_t i = static_cast<std::size_t>(k);
    if (i > best.load(std::memory_order_relaxed)) continue;
    if (pred(i)) {
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  std::size_t b = best.load();
  if (b < n) return b;
  return std::nullopt;
}

template <class F>
std::optional<std::size_t> first_holding(Exec e, std::size_t n, F&& pred) {
  return e == Exec::Parallel && n > 1 ? first_holding_parallel(n, pred)
                                      : first_holding_serial(n, pred);
}

}  // namespace ewt
