#ifndef FEH_EH_HPP
#define FEH_EH_HPP

#include <cstdint>
#include <vector>

#include "feh/bucket.hpp"
#include "feh/config.hpp"
#include "feh/estimator.hpp"

namespace feh {

// Classic exponential histogram over a count-based window.
//
// Buckets are kept oldest-to-newest in a ring allocated once at
// construction. Sizes are powers of two and non-increasing toward the
// newest end. Inserting a 1 appends a size-1 bucket; whenever a size class
// exceeds its cap (k+1 for size 1, ceil(k/2)+1 otherwise) the two oldest
// buckets of that class merge into one of doubled size, cascading upward.
// Expiry is lazy: one oldest-bucket check per update and one per query.
// Timestamps are distinct arrival times, so at most one bucket newly
// expires per tick and the single check suffices.
class ExponentialHistogram final : public Estimator {
 public:
  explicit ExponentialHistogram(const WindowConfig& cfg);

  // Rebuild from an explicit bucket list (oldest first) for replaying
  // known states. Validates age order and the monotone size shape.
  static ExponentialHistogram from_buckets(const WindowConfig& cfg,
                                           const std::vector<Bucket>& oldest_first,
                                           std::uint64_t now);

  void update(bool one) override;
  QueryAnswer query() override;
  double rel_bound() override;
  const char* name() const override { return "eh"; }
  std::uint64_t ticks() const override { return now_; }
  std::uint64_t merge_count() const override { return merges_; }

  std::uint64_t total() const { return total_; }
  std::uint64_t last() const;  // oldest bucket size, 0 when empty
  std::size_t bucket_count() const { return len_; }

  // Sizes oldest-to-newest, for structure checks and layout comparisons.
  std::vector<std::uint64_t> bucket_sizes() const;
  std::vector<Bucket> buckets() const;

  const WindowConfig& config() const { return cfg_; }

 private:
  Bucket& at_(std::size_t i) { return buf_[(head_ + i) % buf_.size()]; }
  const Bucket& at_(std::size_t i) const {
    return buf_[(head_ + i) % buf_.size()];
  }
  static std::uint32_t class_of_(std::uint64_t size);
  std::uint32_t max_count_(std::uint32_t cls) const;
  void expire_();
  void push_newest_(const Bucket& b);
  void cascade_();

  WindowConfig cfg_;
  std::vector<Bucket> buf_;           // ring, capacity + 2 slots
  std::size_t head_ = 0, len_ = 0;
  std::vector<std::uint32_t> counts_; // buckets per size class
  std::uint64_t now_ = 0;
  std::uint64_t total_ = 0;
  std::uint64_t merges_ = 0;
};

}  // namespace feh

#endif
