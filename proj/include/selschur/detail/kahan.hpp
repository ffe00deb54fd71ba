#pragma once

namespace selschur::detail {

// Compensated (Kahan) accumulator; works for double and std::complex<double>
// alike since the correction is componentwise.
template <class T>
struct KahanSum {
  T sum{};
  T comp{};

  void add(const T& x) {
    T y = x - comp;
    T t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace selschur::detail
