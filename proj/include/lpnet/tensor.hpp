#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "lpnet/errors.hpp"

namespace lpnet {

// Dense row-major tensor. Rank is the length of the shape vector; network
// ops use C,H,W (rank 3) or N,C,H,W (rank 4), maps use H,W (rank 2).
template <typename T>
struct Tensor {
  std::vector<int> shape;
  std::vector<T> data;

  Tensor() = default;

  explicit Tensor(std::vector<int> s, T fill = T(0)) : shape(std::move(s)) {
    data.assign(static_cast<size_t>(count(shape)), fill);
  }

  static Tensor from(std::vector<int> s, std::vector<T> d) {
    if (count(s) != static_cast<std::int64_t>(d.size()))
      throw ShapeError("tensor data length " + std::to_string(d.size()) +
                       " does not match shape " + shape_str(s));
    Tensor t;
    t.shape = std::move(s);
    t.data = std::move(d);
    return t;
  }

  static std::int64_t count(const std::vector<int>& s) {
    std::int64_t n = 1;
    for (int e : s) {
      if (e < 0) throw ShapeError("negative extent in shape " + shape_str(s));
      n *= e;
    }
    return n;
  }

  std::int64_t numel() const { return static_cast<std::int64_t>(data.size()); }
  int rank() const { return static_cast<int>(shape.size()); }
  int extent(int d) const { return shape[static_cast<size_t>(d)]; }

  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }

  T& operator[](std::int64_t i) { return data[static_cast<size_t>(i)]; }
  const T& operator[](std::int64_t i) const { return data[static_cast<size_t>(i)]; }

  // Rank-2 accessor for maps.
  T& at2(int y, int x) { return data[static_cast<size_t>(y) * shape[1] + x]; }
  const T& at2(int y, int x) const { return data[static_cast<size_t>(y) * shape[1] + x]; }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  Tensor& reshape(std::vector<int> s) {
    if (count(s) != numel())
      throw ShapeError("reshape " + shape_str(shape) + " -> " + shape_str(s) +
                       " changes element count");
    shape = std::move(s);
    return *this;
  }

  void fill(T v) { std::fill(data.begin(), data.end(), v); }

  T sum() const {
    T s = T(0);
    for (const T& v : data) s += v;
    return s;
  }
  T max() const {
    T m = data.empty() ? T(0) : data[0];
    for (const T& v : data) m = std::max(m, v);
    return m;
  }
  T min() const {
    T m = data.empty() ? T(0) : data[0];
    for (const T& v : data) m = std::min(m, v);
    return m;
  }
  bool all_finite() const {
    for (const T& v : data)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out;
    out.shape = shape;
    out.data.resize(data.size());
    for (size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
    return out;
  }

  static std::string shape_str(const std::vector<int>& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "x" : "") << s[i];
    os << "]";
    return os.str();
  }
  std::string shape_str() const { return shape_str(shape); }
};

// Interprets a rank-3 C,H,W or rank-4 N,C,H,W shape as batched dims.
struct Nchw {
  int n, c, h, w;
  std::int64_t chw() const { return static_cast<std::int64_t>(c) * h * w; }
  std::int64_t hw() const { return static_cast<std::int64_t>(h) * w; }
};

template <typename T>
inline Nchw as_nchw(const Tensor<T>& t, const char* who) {
  if (t.rank() == 3) return {1, t.shape[0], t.shape[1], t.shape[2]};
  if (t.rank() == 4) return {t.shape[0], t.shape[1], t.shape[2], t.shape[3]};
  throw ShapeError(std::string(who) + ": expected rank-3 C,H,W or rank-4 N,C,H,W input, got " +
                   t.shape_str());
}

// Builds an output shape with the same rank convention as the input.
inline std::vector<int> like_rank(int in_rank, int n, int c, int h, int w) {
  if (in_rank == 3) return {c, h, w};
  return {n, c, h, w};
}

}  // namespace lpnet
