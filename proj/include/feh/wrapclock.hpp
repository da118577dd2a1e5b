#ifndef FEH_WRAPCLOCK_HPP
#define FEH_WRAPCLOCK_HPP

#include <cstdint>

namespace feh {

// Grid timestamps are stored reduced modulo 2N. Modulo N would make a
// just-expired time indistinguishable from a fresh one; with 2N every age
// that can occur under lazy expiry (at most N plus one tick of lag) is
// unambiguous at the cost of one extra bit.

inline std::uint32_t ts_wrap(std::uint64_t absolute_time, std::uint64_t window) {
  return static_cast<std::uint32_t>(absolute_time % (2 * window));
}

inline std::uint64_t ts_age(std::uint32_t wrapped, std::uint32_t now_wrapped,
                            std::uint64_t window) {
  const std::uint64_t m = 2 * window;
  return (static_cast<std::uint64_t>(now_wrapped) + m - wrapped) % m;
}

// True iff the element with this wrapped arrival time has left the window,
// assuming its true age is below 2N.
inline bool ts_expired(std::uint32_t wrapped, std::uint32_t now_wrapped,
                       std::uint64_t window) {
  return ts_age(wrapped, now_wrapped, window) >= window;
}

}  // namespace feh

#endif
