#ifndef FEH_ESTIMATOR_HPP
#define FEH_ESTIMATOR_HPP

#include <cstdint>

#include "feh/answer.hpp"

namespace feh {

// Shared contract for every sliding-window counter in this library.
// update() processes exactly one stream element and advances the arrival
// clock whether the element is 0 or 1. query() may process pending expiry
// but must not otherwise change observable state.
//
// Instances are single-owner state machines: movable between threads,
// never shared without external exclusion.
class Estimator {
 public:
  virtual ~Estimator() = default;

  virtual void update(bool one) = 0;
  virtual QueryAnswer query() = 0;

  // Instantaneous upper bound on the relative error, the analog of the
  // absolute bound in QueryAnswer. Defined as abs_bound / (1 + total - last):
  // at least one 1 of the oldest bucket is always inside the window, so the
  // denominator never overstates the truth.
  virtual double rel_bound() = 0;

  virtual const char* name() const = 0;

  // Arrival clock: number of elements seen.
  virtual std::uint64_t ticks() const = 0;

  // Pair merges performed so far (0 for estimators that never merge).
  virtual std::uint64_t merge_count() const { return 0; }
};

}  // namespace feh

#endif
