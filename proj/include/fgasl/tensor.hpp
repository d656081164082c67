#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fgasl {

/// Dense row-major tensor of doubles. 2-D tensors are (H, W); 3-D tensors
/// are (C, H, W) with the channel index outermost.
struct Tensor {
    std::vector<int> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> s) : shape(std::move(s)), data(count(shape), 0.0) {}
    Tensor(std::vector<int> s, std::vector<double> d) : shape(std::move(s)), data(std::move(d)) {
        if (static_cast<std::int64_t>(data.size()) != count(shape))
            throw std::invalid_argument("tensor: data size does not match shape");
    }

    static std::int64_t count(const std::vector<int>& s) {
        std::int64_t n = 1;
        for (int d : s) n *= d;
        return n;
    }

    static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }
    static Tensor full(std::vector<int> s, double v) {
        Tensor t(std::move(s));
        std::fill(t.data.begin(), t.data.end(), v);
        return t;
    }

    std::int64_t size() const { return static_cast<std::int64_t>(data.size()); }
    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }

    double& at(int y, int x) { return data[static_cast<std::size_t>(y) * dim(1) + x]; }
    double at(int y, int x) const { return data[static_cast<std::size_t>(y) * dim(1) + x]; }
    double& at(int c, int y, int x) {
        return data[(static_cast<std::size_t>(c) * dim(1) + y) * dim(2) + x];
    }
    double at(int c, int y, int x) const {
        return data[(static_cast<std::size_t>(c) * dim(1) + y) * dim(2) + x];
    }

    double* ptr() { return data.data(); }
    const double* ptr() const { return data.data(); }
};

/// Integer-valued image used for class-id masks (H, W).
struct IntMask {
    int h = 0, w = 0;
    std::vector<std::int32_t> v;

    IntMask() = default;
    IntMask(int h_, int w_) : h(h_), w(w_), v(static_cast<std::size_t>(h_) * w_, 0) {}

    std::int32_t& at(int y, int x) { return v[static_cast<std::size_t>(y) * w + x]; }
    std::int32_t at(int y, int x) const { return v[static_cast<std::size_t>(y) * w + x]; }
    std::int64_t size() const { return static_cast<std::int64_t>(v.size()); }
    bool operator==(const IntMask& o) const { return h == o.h && w == o.w && v == o.v; }
};

}  // namespace fgasl
