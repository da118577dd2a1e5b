#ifndef FEH_ANSWER_HPP
#define FEH_ANSWER_HPP

namespace feh {

// Query result: the count estimate plus an instantaneous upper bound on
// |estimate - truth|. Estimates are real-valued on purpose; rounding would
// break the error accounting.
struct QueryAnswer {
  double estimate = 0.0;
  double abs_bound = 0.0;
};

}  // namespace feh

#endif
