#ifndef FEH_BUCKET_HPP
#define FEH_BUCKET_HPP

#include <cstdint>
#include <stdexcept>

namespace feh {

// A bucket summarizes `size` ones; `ts` is the arrival time of the most
// recent 1 it contains. Arrival times are 1-based and strictly increasing,
// so bucket timestamps are unique.
struct Bucket {
  std::uint64_t size = 0;
  std::uint64_t ts = 0;
};

// Combine two equal-sized buckets. The merged bucket keeps the newer
// timestamp because that is the arrival of its most recent 1.
inline Bucket merge_pair(const Bucket& older, const Bucket& newer) {
  if (older.size != newer.size)
    throw std::invalid_argument("merge_pair: bucket sizes differ");
  if (older.ts >= newer.ts)
    throw std::invalid_argument("merge_pair: buckets out of age order");
  return Bucket{older.size * 2, newer.ts};
}

}  // namespace feh

#endif
