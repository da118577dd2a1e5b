#ifndef FEH_FEH_HPP
#define FEH_FEH_HPP

#include <cstdint>
#include <deque>
#include <vector>

#include "feh/band.hpp"
#include "feh/bucket.hpp"
#include "feh/config.hpp"
#include "feh/estimator.hpp"

namespace feh {

// Reference flattened histogram. Semantics-defining and tuned for
// auditability; the practical engine must match it answer-for-answer.
//
// The capacity buckets are divided into per-class circular regions.
// Size 1 owns two rows' worth of slots, each other class one row, and the
// partition class (the largest size of the EH-shaped suffix) additionally
// owns every row not yet claimed above it. While slots remain free in a
// class, arriving buckets fill them; only when the partition class has no
// free slot does a flattening merge run: the two oldest partition buckets
// combine, the merged bucket starts (or extends) the class above, and the
// second freed slot becomes the partition's insertion slot. One such merge
// per update at most. The partition doubles once its region has shrunk to
// a single row, which is exactly when the class above has completed a full
// flattened layer.
//
// Each region tracks a head phase so the physical slot layout (for layout
// comparisons) is reproducible: merges consume two slots at the head,
// expiry one, and freed slots re-enter circularly at the region's tail.
class FlattenedHistogram final : public Estimator {
 public:
  explicit FlattenedHistogram(const WindowConfig& cfg);

  void update(bool one) override;
  QueryAnswer query() override;
  double rel_bound() override;
  const char* name() const override { return "feh"; }
  std::uint64_t ticks() const override { return now_; }
  std::uint64_t merge_count() const override { return merges_; }

  std::uint64_t total() const { return total_; }
  std::uint64_t last() const;
  std::uint64_t partition_size() const { return std::uint64_t{1} << partition_; }
  bool has_expired_once() const { return has_t1_; }
  std::uint64_t last_expired_ts() const { return t1_; }
  std::size_t bucket_count() const;

  // Multiset of live bucket sizes (unordered), for convergence checks.
  std::vector<std::uint64_t> size_multiset() const;

  // Physical slot layout: rows of `columns` slot sizes, larger classes
  // first, 0 for an empty slot. Hole positions inside a row follow the
  // region's circular phase.
  std::vector<std::vector<std::uint64_t>> layout_rows() const;

  // Flattening merge at the partition class. Exposed for direct contract
  // tests; update() is the only caller in normal operation, and calling it
  // when a free partition slot exists (or fewer than two partition buckets)
  // is a logic fault.
  void flatten_merge();

  const WindowConfig& config() const { return cfg_; }

 private:
  struct ClassState {
    std::deque<Bucket> buckets;  // oldest first
    std::uint32_t slots = 0;
    std::uint64_t phase = 0;  // slots consumed at the head, for layout
  };

  int largest_nonempty_() const;
  std::uint32_t min_slots_(std::uint32_t cls) const;
  Bucket pop_oldest_pair_(ClassState& cs);
  void expire_();

  WindowConfig cfg_;
  std::vector<ClassState> classes_;
  std::uint32_t partition_ = 0;
  std::uint64_t now_ = 0;
  std::uint64_t total_ = 0;
  std::uint64_t t1_ = 0;
  bool has_t1_ = false;
  std::uint64_t merges_ = 0;
};

}  // namespace feh

#endif
