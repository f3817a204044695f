#pragma once

#include <cmath>

namespace metastable {

// Compensated accumulator built on the error-free TwoSum transformation.
// The rounding error of every addition is collected in a second word and
// folded back in on read, so the result is as accurate as if the sum were
// carried in roughly twice the working precision.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  CompensatedSum& operator+=(double value) {
    const double t = sum_ + value;
    const double z = t - sum_;
    err_ += (sum_ - (t - z)) + (value - z);
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator+=(const CompensatedSum& other) {
    *this += other.sum_;
    err_ += other.err_;
    return *this;
  }

  double value() const { return sum_ + err_; }

 private:
  double sum_ = 0.0;
  double err_ = 0.0;
};

}  // namespace metastable
