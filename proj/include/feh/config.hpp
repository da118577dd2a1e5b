#ifndef FEH_CONFIG_HPP
#define FEH_CONFIG_HPP

#include <cstdint>
#include <stdexcept>

namespace feh {

// Sizing for a count-based window estimator.
//
// All three histogram variants are allocated from the same grid so that
// accuracy comparisons run at identical memory:
//   columns = k/2+1, rounded up to the next even number
//   rows    = ceil(log2(2*max_ones/k)) + 2   (at least 2)
//   capacity = rows * columns buckets
// Size 1 gets two rows' worth of slots, every other size class one row.
struct WindowConfig {
  std::uint64_t window_size = 0;  // N, elements
  std::uint64_t max_ones = 0;     // N', pre-estimated max 1's in a window
  std::uint32_t k = 0;            // accuracy parameter, k = ceil(1/eps)
  std::uint32_t columns = 0;
  std::uint32_t rows = 0;
  std::uint32_t capacity = 0;

  static WindowConfig make(std::uint64_t window_size, std::uint64_t max_ones,
                           std::uint32_t k);

  std::uint32_t half_k() const { return (k + 1) / 2; }  // ceil(k/2)
};

inline WindowConfig WindowConfig::make(std::uint64_t window_size,
                                       std::uint64_t max_ones,
                                       std::uint32_t k) {
  if (window_size < 1) throw std::invalid_argument("window_size must be >= 1");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (max_ones < 1) throw std::invalid_argument("max_ones must be >= 1");
  if (max_ones > window_size)
    throw std::invalid_argument("max_ones cannot exceed window_size");

  WindowConfig cfg;
  cfg.window_size = window_size;
  cfg.max_ones = max_ones;
  cfg.k = k;

  std::uint32_t cols = cfg.half_k() + 1;
  if (cols % 2 != 0) ++cols;
  cfg.columns = cols;

  // smallest r with 2^r * k >= 2 * max_ones, clamped at 0
  std::uint32_t r = 0;
  while ((static_cast<std::uint64_t>(k) << r) < 2 * max_ones) ++r;
  cfg.rows = r + 2;

  cfg.capacity = cfg.rows * cfg.columns;
  return cfg;
}

}  // namespace feh

#endif
