#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace af {

// Conserved state with up to three components (m = 1 for scalar laws, m = 3
// for Euler). Arithmetic is componentwise over the active components.
class ConservedVector {
public:
    static constexpr std::size_t max_components = 3;

    ConservedVector() = default;
    explicit ConservedVector(std::size_t m) : m_(m) { assert(m >= 1 && m <= max_components); }
    ConservedVector(std::initializer_list<double> values) : m_(values.size())
    {
        assert(m_ >= 1 && m_ <= max_components);
        std::size_t k = 0;
        for (double v : values) data_[k++] = v;
    }

    static ConservedVector scalar(double u) { return ConservedVector{u}; }
    static ConservedVector filled(std::size_t m, double value)
    {
        ConservedVector out(m);
        for (std::size_t k = 0; k < m; ++k) out.data_[k] = value;
        return out;
    }

    std::size_t size() const { return m_; }
    double& operator[](std::size_t k) { return data_[k]; }
    double operator[](std::size_t k) const { return data_[k]; }
    std::span<const double> values() const { return {data_.data(), m_}; }

    bool all_finite() const
    {
        for (std::size_t k = 0; k < m_; ++k)
            if (!std::isfinite(data_[k])) return false;
        return true;
    }

    ConservedVector& operator+=(const ConservedVector& o)
    {
        for (std::size_t k = 0; k < m_; ++k) data_[k] += o.data_[k];
        return *this;
    }
    ConservedVector& operator-=(const ConservedVector& o)
    {
        for (std::size_t k = 0; k < m_; ++k) data_[k] -= o.data_[k];
        return *this;
    }
    ConservedVector& operator*=(double s)
    {
        for (std::size_t k = 0; k < m_; ++k) data_[k] *= s;
        return *this;
    }

    friend ConservedVector operator+(ConservedVector a, const ConservedVector& b) { return a += b; }
    friend ConservedVector operator-(ConservedVector a, const ConservedVector& b) { return a -= b; }
    friend ConservedVector operator*(ConservedVector a, double s) { return a *= s; }
    friend ConservedVector operator*(double s, ConservedVector a) { return a *= s; }
    friend ConservedVector operator-(ConservedVector a) { return a *= -1.0; }

    friend bool operator==(const ConservedVector& a, const ConservedVector& b)
    {
        if (a.m_ != b.m_) return false;
        for (std::size_t k = 0; k < a.m_; ++k)
            if (a.data_[k] != b.data_[k]) return false;
        return true;
    }

private:
    std::size_t m_ = 1;
    std::array<double, max_components> data_{};
};

// Dense m x m matrix for eigensystems, m <= 3.
struct SmallMatrix {
    std::size_t m = 1;
    std::array<std::array<double, 3>, 3> a{};

    double& operator()(std::size_t r, std::size_t c) { return a[r][c]; }
    double operator()(std::size_t r, std::size_t c) const { return a[r][c]; }

    ConservedVector apply(const ConservedVector& x) const
    {
        ConservedVector y(m);
        for (std::size_t r = 0; r < m; ++r) {
            double s = 0.0;
            for (std::size_t c = 0; c < m; ++c) s += a[r][c] * x[c];
            y[r] = s;
        }
        return y;
    }
};

inline SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y)
{
    SmallMatrix z;
    z.m = x.m;
    for (std::size_t r = 0; r < x.m; ++r)
        for (std::size_t c = 0; c < x.m; ++c) {
            double s = 0.0;
            for (std::size_t k = 0; k < x.m; ++k) s += x.a[r][k] * y.a[k][c];
            z.a[r][c] = s;
        }
    return z;
}

} // namespace af
