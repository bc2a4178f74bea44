#pragma once

#include <cmath>
#include <initializer_list>
#include <span>
#include <vector>

#include "snn/errors.hpp"

namespace snn {

/// Dense real matrix, row-major. The single carrier type for every matrix in
/// the library; constructors reject non-finite entries.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}

    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0.0) {
        if (rows <= 0 || cols <= 0) throw DimensionError("Mat: dimensions must be positive");
    }

    Mat(int rows, int cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows <= 0 || cols <= 0) throw DimensionError("Mat: dimensions must be positive");
        if (e_.size() != size_t(rows) * cols)
            throw DimensionError("Mat: entry count does not match rows*cols");
        check_finite();
    }

    Mat(std::initializer_list<std::initializer_list<double>> rows) {
        rows_ = int(rows.size());
        cols_ = rows_ ? int(rows.begin()->size()) : 0;
        if (rows_ == 0 || cols_ == 0) throw DimensionError("Mat: empty initializer");
        e_.reserve(size_t(rows_) * cols_);
        for (const auto& r : rows) {
            if (int(r.size()) != cols_) throw DimensionError("Mat: ragged initializer");
            e_.insert(e_.end(), r.begin(), r.end());
        }
        check_finite();
    }

    static Mat zeros(int rows, int cols) { return Mat(rows, cols); }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    /// Rectangular identity I_{rows x cols}: ones on the main diagonal.
    static Mat rect_identity(int rows, int cols) {
        Mat m(rows, cols);
        for (int i = 0; i < std::min(rows, cols); ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    double operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    std::span<const double> entries() const { return e_; }
    std::span<double> entries() { return e_; }

    bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat& operator+=(const Mat& o) {
        require_same_shape(o, "operator+=");
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }

    Mat& operator-=(const Mat& o) {
        require_same_shape(o, "operator-=");
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }

    Mat& operator*=(double s) {
        for (double& v : e_) v *= s;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, double s) { return a *= s; }
    friend Mat operator*(double s, Mat a) { return a *= s; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw DimensionError("Mat multiply: inner dimensions differ");
        Mat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : e_) s += v * v;
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : e_) m = std::max(m, std::fabs(v));
        return m;
    }

    void require_same_shape(const Mat& o, const char* who) const {
        if (!same_shape(o)) throw DimensionError(std::string(who) + ": shape mismatch");
    }

  private:
    void check_finite() const {
        for (double v : e_)
            if (!std::isfinite(v)) throw InvariantViolation("Mat: non-finite entry");
    }

    int rows_, cols_;
    std::vector<double> e_;
};

} // namespace snn
