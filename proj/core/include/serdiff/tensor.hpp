#pragma once

#include <cstddef>
#include <vector>

namespace serdiff {

// Dense row-major double tensor. Rank is dynamic but in practice everything
// here is rank 1 ([d]), 2 ([rows, cols]) or 3 ([channels, height, width]).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape, double fill = 0.0);

  static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  // Rank-3 [C, H, W] access.
  double& at(int c, int y, int x) {
    return data_[(static_cast<std::size_t>(c) * shape_[1] + y) * shape_[2] + x];
  }
  double at(int c, int y, int x) const {
    return data_[(static_cast<std::size_t>(c) * shape_[1] + y) * shape_[2] + x];
  }

  // Rank-2 [rows, cols] access.
  double& at(int r, int c) {
    return data_[static_cast<std::size_t>(r) * shape_[1] + c];
  }
  double at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * shape_[1] + c];
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;

  double min_value() const;
  double max_value() const;
  double abs_mean() const;

  void fill(double v);
  void clamp_in_place(double lo, double hi);

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(double s);

 private:
  std::vector<int> shape_;
  std::vector<double> data_;
};

// Stacks b's channels after a's. Both must be rank 3 with equal H, W.
Tensor channel_concat(const Tensor& a, const Tensor& b);

// Channels [c_begin, c_end) of a rank-3 tensor.
Tensor channel_slice(const Tensor& t, int c_begin, int c_end);

double dot(const Tensor& a, const Tensor& b);

}  // namespace serdiff
