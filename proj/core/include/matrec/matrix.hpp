#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace matrec {

// Dense row-major matrix of doubles. Rows are handed out as spans; all the
// factor models in this library store their parameters this way.
class RowMatrix {
public:
    RowMatrix() = default;
    RowMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    std::span<const double> row(size_t i) const {
        return std::span<const double>(data_).subspan(i * cols_, cols_);
    }
    std::span<double> row(size_t i) {
        return std::span<double>(data_).subspan(i * cols_, cols_);
    }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const RowMatrix&) const = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return s;
}

// x += alpha * v
inline void axpy(std::span<double> x, double alpha, std::span<const double> v) {
    for (size_t i = 0; i < x.size(); ++i) x[i] += alpha * v[i];
}

}  // namespace matrec
