#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "fas/common.hpp"

namespace fas {

// Dense row-major tensor of doubles, rank 1..3. Small on purpose: desk-scale
// models run in double precision so gradient checks are exact to fd noise.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(int n) : shape_{n}, data_(static_cast<size_t>(n), 0.0) { check(); }
  Tensor(int a, int b) : shape_{a, b}, data_(static_cast<size_t>(a) * b, 0.0) { check(); }
  Tensor(int a, int b, int c)
      : shape_{a, b, c}, data_(static_cast<size_t>(a) * b * c, 0.0) {
    check();
  }

  static Tensor like(const Tensor& other) {
    Tensor t;
    t.shape_ = other.shape_;
    t.data_.assign(other.data_.size(), 0.0);
    return t;
  }

  int rank() const { return static_cast<int>(shape_.size()); }
  const std::vector<int>& shape() const { return shape_; }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  size_t numel() const { return data_.size(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](size_t i) { return data_[i]; }
  double operator[](size_t i) const { return data_[i]; }

  double& at(int i) { return data_[static_cast<size_t>(i)]; }
  double at(int i) const { return data_[static_cast<size_t>(i)]; }

  double& at(int i, int j) { return data_[static_cast<size_t>(i) * shape_[1] + j]; }
  double at(int i, int j) const { return data_[static_cast<size_t>(i) * shape_[1] + j]; }

  double& at(int c, int y, int x) {
    return data_[(static_cast<size_t>(c) * shape_[1] + y) * shape_[2] + x];
  }
  double at(int c, int y, int x) const {
    return data_[(static_cast<size_t>(c) * shape_[1] + y) * shape_[2] + x];
  }

  void fill(double v) { data_.assign(data_.size(), v); }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  bool all_finite() const {
    for (const double v : data_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  double l2_norm() const {
    double sum = 0.0;
    for (const double v : data_) sum += v * v;
    return std::sqrt(sum);
  }

  bool operator==(const Tensor&) const = default;

 private:
  void check() const {
    for (const int d : shape_) {
      if (d <= 0) throw ShapeError("tensor dimensions must be positive");
    }
  }

  std::vector<int> shape_;
  std::vector<double> data_;
};

}  // namespace fas
