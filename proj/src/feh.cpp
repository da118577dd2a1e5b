#include "feh/feh.hpp"

#include <stdexcept>

namespace feh {

namespace {
constexpr std::size_t kMaxClasses = 48;
}

FlattenedHistogram::FlattenedHistogram(const WindowConfig& cfg)
    : cfg_(cfg), classes_(kMaxClasses) {
  if (cfg_.rows < 2)
    throw std::invalid_argument("flattened histogram needs at least 2 rows");
  // Everything starts as size-1 territory; merges hand slots upward later.
  classes_[0].slots = cfg_.capacity;
}

std::uint32_t FlattenedHistogram::min_slots_(std::uint32_t cls) const {
  return cls == 0 ? 2 * cfg_.columns : cfg_.columns;
}

int FlattenedHistogram::largest_nonempty_() const {
  for (int c = static_cast<int>(kMaxClasses) - 1; c >= 0; --c)
    if (!classes_[c].buckets.empty()) return c;
  return -1;
}

Bucket FlattenedHistogram::pop_oldest_pair_(ClassState& cs) {
  Bucket a = cs.buckets.front();
  cs.buckets.pop_front();
  Bucket b = cs.buckets.front();
  cs.buckets.pop_front();
  cs.phase += 2;
  ++merges_;
  return merge_pair(a, b);
}

void FlattenedHistogram::flatten_merge() {
  ClassState& p = classes_[partition_];
  if (p.buckets.size() < 2)
    throw std::logic_error("flatten_merge: fewer than two partition buckets");
  if (p.buckets.size() < p.slots)
    throw std::logic_error("flatten_merge: a free partition slot exists");
  if (partition_ + 1 >= kMaxClasses)
    throw std::logic_error("flatten_merge: class range exhausted");
  Bucket merged = pop_oldest_pair_(p);
  p.slots -= 1;
  classes_[partition_ + 1].slots += 1;
  classes_[partition_ + 1].buckets.push_back(merged);
  if (p.slots == min_slots_(partition_)) ++partition_;
}

void FlattenedHistogram::expire_() {
  const int c = largest_nonempty_();
  if (c < 0) return;
  ClassState& cs = classes_[c];
  const Bucket& oldest = cs.buckets.front();
  if (now_ - oldest.ts >= cfg_.window_size) {
    t1_ = oldest.ts;
    has_t1_ = true;
    total_ -= oldest.size;
    cs.buckets.pop_front();
    cs.phase += 1;  // freed slot re-enters at the region tail
  }
}

void FlattenedHistogram::update(bool one) {
  ++now_;
  expire_();
  if (!one) return;
  total_ += 1;

  Bucket pending{1, now_};
  std::uint32_t c = 0;
  for (;;) {
    ClassState& cs = classes_[c];
    if (cs.buckets.size() < cs.slots) {
      cs.buckets.push_back(pending);
      return;
    }
    if (c == partition_) {
      flatten_merge();
      classes_[c].buckets.push_back(pending);
      return;
    }
    // Full non-partition class: merge its two oldest, keep cascading.
    Bucket merged = pop_oldest_pair_(cs);
    cs.buckets.push_back(pending);
    pending = merged;
    ++c;
  }
}

std::uint64_t FlattenedHistogram::last() const {
  const int c = largest_nonempty_();
  return c < 0 ? 0 : classes_[c].buckets.front().size;
}

std::size_t FlattenedHistogram::bucket_count() const {
  std::size_t n = 0;
  for (const ClassState& cs : classes_) n += cs.buckets.size();
  return n;
}

std::vector<std::uint64_t> FlattenedHistogram::size_multiset() const {
  std::vector<std::uint64_t> out;
  for (const ClassState& cs : classes_)
    for (const Bucket& b : cs.buckets) out.push_back(b.size);
  return out;
}

QueryAnswer FlattenedHistogram::query() {
  expire_();
  const int c = largest_nonempty_();
  if (c < 0) return {0.0, 0.0};
  const Bucket& oldest = classes_[c].buckets.front();

  if (!has_t1_) {
    if (now_ <= cfg_.window_size)
      return {static_cast<double>(total_), 0.0};  // nothing has left yet
    const double half = static_cast<double>(oldest.size) / 2.0;
    return {static_cast<double>(total_) - half, half};
  }

  // x is the window's left boundary; the oldest bucket's ones live in
  // (t1, Tj], so the band pins how many of them x has passed.
  const GrowthBand band(t1_, oldest.ts, oldest.size);
  const std::uint64_t x = now_ - cfg_.window_size;
  return {static_cast<double>(total_) - band_estimate(band, x),
          band_error_bound(band, x)};
}

double FlattenedHistogram::rel_bound() {
  const QueryAnswer qa = query();
  const std::uint64_t l = last();
  if (l == 0) return 0.0;
  return qa.abs_bound /
         (1.0 + static_cast<double>(total_) - static_cast<double>(l));
}

std::vector<std::vector<std::uint64_t>> FlattenedHistogram::layout_rows()
    const {
  std::vector<std::uint64_t> flat;
  flat.reserve(cfg_.capacity);
  for (int c = static_cast<int>(kMaxClasses) - 1; c >= 0; --c) {
    const ClassState& cs = classes_[c];
    if (cs.slots == 0) continue;
    std::vector<std::uint64_t> block(cs.slots, 0);
    const std::uint64_t h = cs.phase % cs.slots;
    for (std::size_t i = 0; i < cs.buckets.size(); ++i)
      block[(h + i) % cs.slots] = cs.buckets[i].size;
    flat.insert(flat.end(), block.begin(), block.end());
  }
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t r = 0; r < cfg_.rows; ++r)
    rows.emplace_back(flat.begin() + r * cfg_.columns,
                      flat.begin() + (r + 1) * cfg_.columns);
  return rows;
}

}  // namespace feh
