#pragma once

namespace mwave {

// Compensated (Kahan) accumulator; keeps series sums reproducible at 1e-10
// tolerances regardless of term count.
class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace mwave
