#ifndef FEH_ORACLE_HPP
#define FEH_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "feh/estimator.hpp"

namespace feh {

// Exact sliding-window counter: a ring of the last N bits. Ground truth
// for every error metric in the harness and the test suites.
class ExactOracle {
 public:
  explicit ExactOracle(std::uint64_t window_size)
      : window_(window_size), bits_(window_size, 0) {
    if (window_size < 1)
      throw std::invalid_argument("oracle window must be >= 1");
  }

  void update(bool one) {
    const std::size_t pos = static_cast<std::size_t>(ticks_ % window_);
    if (ticks_ >= window_) ones_ -= bits_[pos];
    bits_[pos] = one ? 1 : 0;
    ones_ += bits_[pos];
    ++ticks_;
  }

  std::uint64_t query() const { return ones_; }
  std::uint64_t ticks() const { return ticks_; }
  std::uint64_t window_size() const { return window_; }

 private:
  std::uint64_t window_;
  std::vector<std::uint8_t> bits_;
  std::uint64_t ticks_ = 0;
  std::uint64_t ones_ = 0;
};

// Adapter so the harness can replay the oracle through the estimator
// interface (its answers are exact, bound 0).
class OracleEstimator final : public Estimator {
 public:
  explicit OracleEstimator(std::uint64_t window_size) : oracle_(window_size) {}

  void update(bool one) override { oracle_.update(one); }
  QueryAnswer query() override {
    return {static_cast<double>(oracle_.query()), 0.0};
  }
  double rel_bound() override { return 0.0; }
  const char* name() const override { return "oracle"; }
  std::uint64_t ticks() const override { return oracle_.ticks(); }

 private:
  ExactOracle oracle_;
};

}  // namespace feh

#endif
