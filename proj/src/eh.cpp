#include "feh/eh.hpp"

#include <bit>
#include <stdexcept>

namespace feh {

ExponentialHistogram::ExponentialHistogram(const WindowConfig& cfg)
    : cfg_(cfg), buf_(cfg.capacity + 2), counts_(64, 0) {}

ExponentialHistogram ExponentialHistogram::from_buckets(
    const WindowConfig& cfg, const std::vector<Bucket>& oldest_first,
    std::uint64_t now) {
  ExponentialHistogram h(cfg);
  std::uint64_t prev_ts = 0;
  std::uint64_t prev_size = ~std::uint64_t{0};
  for (const Bucket& b : oldest_first) {
    if (b.size == 0 || (b.size & (b.size - 1)) != 0)
      throw std::invalid_argument("bucket sizes must be powers of two");
    if (b.ts <= prev_ts)
      throw std::invalid_argument("bucket timestamps must be increasing");
    if (b.size > prev_size)
      throw std::invalid_argument("bucket sizes must not grow toward newest");
    if (b.ts > now) throw std::invalid_argument("bucket from the future");
    prev_ts = b.ts;
    prev_size = b.size;
    h.push_newest_(b);
    h.counts_[class_of_(b.size)] += 1;
    h.total_ += b.size;
  }
  h.now_ = now;
  return h;
}

std::uint32_t ExponentialHistogram::class_of_(std::uint64_t size) {
  return static_cast<std::uint32_t>(std::bit_width(size) - 1);
}

std::uint32_t ExponentialHistogram::max_count_(std::uint32_t cls) const {
  return cls == 0 ? cfg_.k + 1 : cfg_.half_k() + 1;
}

void ExponentialHistogram::push_newest_(const Bucket& b) {
  if (len_ + 1 >= buf_.size())
    throw std::length_error("bucket storage exhausted; max_ones underestimated");
  buf_[(head_ + len_) % buf_.size()] = b;
  ++len_;
}

void ExponentialHistogram::expire_() {
  if (len_ == 0) return;
  const Bucket& oldest = at_(0);
  if (now_ - oldest.ts >= cfg_.window_size) {
    total_ -= oldest.size;
    counts_[class_of_(oldest.size)] -= 1;
    head_ = (head_ + 1) % buf_.size();
    --len_;
  }
}

void ExponentialHistogram::cascade_() {
  std::uint32_t cls = 0;
  while (counts_[cls] > max_count_(cls)) {
    // The two oldest buckets of this class sit right after all larger ones.
    std::size_t start = 0;
    for (std::size_t d = cls + 1; d < counts_.size(); ++d) start += counts_[d];
    Bucket merged = merge_pair(at_(start), at_(start + 1));
    at_(start + 1) = merged;
    for (std::size_t i = start; i > 0; --i) at_(i) = at_(i - 1);
    head_ = (head_ + 1) % buf_.size();
    --len_;
    counts_[cls] -= 2;
    counts_[cls + 1] += 1;
    ++merges_;
    ++cls;
  }
}

void ExponentialHistogram::update(bool one) {
  ++now_;
  expire_();
  if (!one) return;
  push_newest_(Bucket{1, now_});
  counts_[0] += 1;
  total_ += 1;
  cascade_();
}

std::uint64_t ExponentialHistogram::last() const {
  return len_ == 0 ? 0 : at_(0).size;
}

QueryAnswer ExponentialHistogram::query() {
  expire_();
  if (len_ == 0) return {0.0, 0.0};
  const double half_last = static_cast<double>(at_(0).size) / 2.0;
  return {static_cast<double>(total_) - half_last, half_last};
}

double ExponentialHistogram::rel_bound() {
  expire_();
  if (len_ == 0) return 0.0;
  const double l = static_cast<double>(at_(0).size);
  return l / (2.0 * (1.0 + static_cast<double>(total_) - l));
}

std::vector<std::uint64_t> ExponentialHistogram::bucket_sizes() const {
  std::vector<std::uint64_t> out;
  out.reserve(len_);
  for (std::size_t i = 0; i < len_; ++i) out.push_back(at_(i).size);
  return out;
}

std::vector<Bucket> ExponentialHistogram::buckets() const {
  std::vector<Bucket> out;
  out.reserve(len_);
  for (std::size_t i = 0; i < len_; ++i) out.push_back(at_(i));
  return out;
}

}  // namespace feh
