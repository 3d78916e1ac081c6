#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bonediff {

// Dense row-major tensor of doubles. Rank up to 4 is what the library uses;
// shapes are plain int64 vectors.
class Tensor {
  public:
    Tensor() = default;
    explicit Tensor(std::vector<int64_t> dims);
    Tensor(std::vector<int64_t> dims, std::vector<double> values);

    static Tensor zeros(std::vector<int64_t> dims) { return Tensor(std::move(dims)); }
    static Tensor full(std::vector<int64_t> dims, double v);

    const std::vector<int64_t>& dims() const { return dims_; }
    int rank() const { return static_cast<int>(dims_.size()); }
    int64_t dim(int i) const { return dims_[static_cast<size_t>(i)]; }
    int64_t size() const { return static_cast<int64_t>(data_.size()); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    double& at(int64_t i, int64_t j) { return data_[static_cast<size_t>(i * dims_[1] + j)]; }
    double at(int64_t i, int64_t j) const { return data_[static_cast<size_t>(i * dims_[1] + j)]; }
    double& at(int64_t i, int64_t j, int64_t k) {
        return data_[static_cast<size_t>((i * dims_[1] + j) * dims_[2] + k)];
    }
    double at(int64_t i, int64_t j, int64_t k) const {
        return data_[static_cast<size_t>((i * dims_[1] + j) * dims_[2] + k)];
    }
    double& at(int64_t i, int64_t j, int64_t k, int64_t l) {
        return data_[static_cast<size_t>(((i * dims_[1] + j) * dims_[2] + k) * dims_[3] + l)];
    }

    bool same_shape(const Tensor& o) const { return dims_ == o.dims_; }
    Tensor reshaped(std::vector<int64_t> dims) const;
    bool all_finite() const;

    std::string shape_str() const;

  private:
    std::vector<int64_t> dims_;
    std::vector<double> data_;
};

int64_t shape_product(const std::vector<int64_t>& dims);
std::string shape_str(const std::vector<int64_t>& dims);

}  // namespace bonediff
