#ifndef FEH_BAND_HPP
#define FEH_BAND_HPP

#include <cstdint>
#include <stdexcept>

namespace feh {

// Growth band of the oldest bucket. Once some bucket has expired, the cj
// ones of the current oldest bucket are pinned to the interval (t1, t2]:
// t1 is the timestamp of the most recently cleared bucket, t2 the oldest
// bucket's own timestamp. The number of those ones that have left the
// window is a function f(x) of the window's left boundary x, and the band
// geometry bounds f(x) tightly enough to answer queries with a smaller
// error than the plain Total - Last/2 rule.
struct GrowthBand {
  std::uint64_t t1 = 0;
  std::uint64_t t2 = 0;
  std::uint64_t cj = 0;  // oldest bucket size

  GrowthBand(std::uint64_t t1_, std::uint64_t t2_, std::uint64_t cj_)
      : t1(t1_), t2(t2_), cj(cj_) {
    if (t1 >= t2) throw std::invalid_argument("growth band needs t1 < t2");
    if (cj < 1 || cj > t2 - t1)
      throw std::invalid_argument("growth band needs 1 <= cj <= t2 - t1");
  }
};

namespace detail {
inline void check_band_x(const GrowthBand& b, std::uint64_t x) {
  if (x < b.t1 || x > b.t2)
    throw std::domain_error("band query point outside [t1, t2]");
}
}  // namespace detail

// Midpoint estimate f'(x) of the expired portion of the oldest bucket.
// Piecewise linear; the two cases split on whether the bucket could fit in
// either half of the band. 0 <= f'(x) <= cj.
inline double band_estimate(const GrowthBand& b, std::uint64_t x) {
  detail::check_band_x(b, x);
  const double xd = static_cast<double>(x);
  const double t1 = static_cast<double>(b.t1);
  const double t2 = static_cast<double>(b.t2);
  const double cj = static_cast<double>(b.cj);
  if (2 * b.cj <= b.t2 - b.t1) {
    if (x < b.t1 + b.cj) return (xd - t1) / 2.0;
    if (x <= b.t2 - b.cj) return cj / 2.0;
    return (xd - t2) / 2.0 + cj;
  }
  if (x < b.t2 - b.cj) return (xd - t1) / 2.0;
  if (x <= b.t1 + b.cj) return xd - ((t1 + t2) - cj) / 2.0;
  return (xd - t2) / 2.0 + cj;
}

// Worst-case deviation AE(x) of f'(x) from the true f(x). Never exceeds
// cj/2, and the adjacent branch formulas agree exactly at the breakpoints.
inline double band_error_bound(const GrowthBand& b, std::uint64_t x) {
  detail::check_band_x(b, x);
  const double xd = static_cast<double>(x);
  const double t1 = static_cast<double>(b.t1);
  const double t2 = static_cast<double>(b.t2);
  const double cj = static_cast<double>(b.cj);
  if (2 * b.cj <= b.t2 - b.t1) {
    if (x < b.t1 + b.cj) return (xd - t1) / 2.0;
    if (x <= b.t2 - b.cj) return cj / 2.0;
    return (t2 - xd) / 2.0;
  }
  if (x < b.t2 - b.cj) return (xd - t1) / 2.0;
  if (x <= b.t1 + b.cj) return (t2 - t1 - cj) / 2.0;
  return (t2 - xd) / 2.0;
}

}  // namespace feh

#endif
