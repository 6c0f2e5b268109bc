#pragma once

#include <stdexcept>
#include <string>

namespace photonstat {

// A truncated construction ran out of room before meeting the requested
// tail mass. Carries the tail mass that was actually achieved.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved_tail)
      : std::runtime_error(what), achieved_tail_(achieved_tail) {}

  double achieved_tail() const { return achieved_tail_; }

 private:
  double achieved_tail_;
};

// Requested (mean, variance) pair lies outside what squeezed coherent
// states can reach at that mean.
class InfeasibleMomentsError : public std::domain_error {
 public:
  InfeasibleMomentsError(const std::string& what, double min_variance,
                         double max_variance)
      : std::domain_error(what),
        min_variance_(min_variance),
        max_variance_(max_variance) {}

  double min_variance() const { return min_variance_; }
  double max_variance() const { return max_variance_; }

 private:
  double min_variance_;
  double max_variance_;
};

}  // namespace photonstat
