#include "serdiff/tensor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace serdiff {

Tensor::Tensor(std::vector<int> shape, double fill) : shape_(std::move(shape)) {
  std::size_t n = 1;
  for (int d : shape_) {
    if (d <= 0) throw std::invalid_argument("Tensor: non-positive dimension");
    n *= static_cast<std::size_t>(d);
  }
  data_.assign(n, fill);
}

bool Tensor::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double Tensor::min_value() const {
  return *std::min_element(data_.begin(), data_.end());
}

double Tensor::max_value() const {
  return *std::max_element(data_.begin(), data_.end());
}

double Tensor::abs_mean() const {
  double s = 0.0;
  for (double v : data_) s += std::abs(v);
  return data_.empty() ? 0.0 : s / static_cast<double>(data_.size());
}

void Tensor::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

void Tensor::clamp_in_place(double lo, double hi) {
  for (double& v : data_) v = std::clamp(v, lo, hi);
}

Tensor& Tensor::operator+=(const Tensor& other) {
  assert(same_shape(other));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  assert(same_shape(other));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Tensor channel_concat(const Tensor& a, const Tensor& b) {
  if (a.rank() != 3 || b.rank() != 3 || a.dim(1) != b.dim(1) || a.dim(2) != b.dim(2)) {
    throw std::invalid_argument("channel_concat: incompatible shapes");
  }
  Tensor out({a.dim(0) + b.dim(0), a.dim(1), a.dim(2)});
  std::copy(a.data(), a.data() + a.size(), out.data());
  std::copy(b.data(), b.data() + b.size(), out.data() + a.size());
  return out;
}

Tensor channel_slice(const Tensor& t, int c_begin, int c_end) {
  if (t.rank() != 3 || c_begin < 0 || c_end > t.dim(0) || c_begin >= c_end) {
    throw std::invalid_argument("channel_slice: bad channel range");
  }
  Tensor out({c_end - c_begin, t.dim(1), t.dim(2)});
  const std::size_t plane = static_cast<std::size_t>(t.dim(1)) * t.dim(2);
  std::copy(t.data() + c_begin * plane, t.data() + c_end * plane, out.data());
  return out;
}

double dot(const Tensor& a, const Tensor& b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace serdiff
