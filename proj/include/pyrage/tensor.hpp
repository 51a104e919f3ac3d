#pragma once

#include <cstdint>
#include <cstring>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pyrage {

/// Dense row-major tensor. Networks use (N, C, H, W); losses and heads
/// also use (N, D) and flat shapes.
template <class T>
struct Tensor {
    std::vector<int> shape;
    std::vector<T> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> s) : shape(std::move(s)), data(count(shape)) {}
    Tensor(std::vector<int> s, T fill) : shape(std::move(s)), data(count(shape), fill) {}

    static std::size_t count(const std::vector<int>& s) {
        std::size_t n = 1;
        for (int d : s) {
            if (d < 0) throw std::invalid_argument("negative tensor dim");
            n *= static_cast<std::size_t>(d);
        }
        return n;
    }

    std::size_t size() const { return data.size(); }
    T* ptr() { return data.data(); }
    const T* ptr() const { return data.data(); }

    int dim(int i) const { return shape.at(static_cast<std::size_t>(i)); }
    int ndim() const { return static_cast<int>(shape.size()); }

    void fill(T v) { std::fill(data.begin(), data.end(), v); }
    void zero() { fill(T(0)); }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    Tensor& operator+=(const Tensor& o) {
        if (!same_shape(o)) throw std::invalid_argument("tensor shape mismatch in +=");
        for (std::size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
        return *this;
    }

    template <class U>
    Tensor<U> cast() const {
        Tensor<U> r;
        r.shape = shape;
        r.data.resize(data.size());
        for (std::size_t i = 0; i < data.size(); ++i) r.data[i] = static_cast<U>(data[i]);
        return r;
    }

    std::string shape_str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < shape.size(); ++i)
            s += std::to_string(shape[i]) + (i + 1 < shape.size() ? "," : "");
        return s + ")";
    }
};

template <class T>
void fill_normal(Tensor<T>& t, std::mt19937_64& rng, double stddev) {
    std::normal_distribution<double> d(0.0, stddev);
    for (auto& v : t.data) v = static_cast<T>(d(rng));
}

template <class T>
void fill_uniform(Tensor<T>& t, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    for (auto& v : t.data) v = static_cast<T>(d(rng));
}

/// FNV-1a over raw bytes; used for frozen-parameter and purity assertions.
inline std::uint64_t bytes_hash(const void* p, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(p);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= b[i];
        h *= 1099511628211ull;
    }
    return h;
}

template <class T>
std::uint64_t tensor_hash(const Tensor<T>& t) {
    return bytes_hash(t.ptr(), t.size() * sizeof(T));
}

}  // namespace pyrage
