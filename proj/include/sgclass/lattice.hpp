#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "sgclass/ints.hpp"
#include "sgclass/rational.hpp"

namespace sgclass {

/// A point of the ambient integer lattice. Coordinates may be negative
/// (differences of semigroup elements are routinely queried), all arithmetic
/// is overflow-checked, and comparison is lexicographic so that ordered
/// containers iterate in a canonical order.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::size_t dim) : c_(dim, 0) {}
    LatticeVector(std::initializer_list<std::int64_t> init) : c_(init) {}
    explicit LatticeVector(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}

    std::size_t dim() const { return c_.size(); }
    std::int64_t operator[](std::size_t i) const { return c_[i]; }
    std::int64_t& operator[](std::size_t i) { return c_[i]; }
    const std::vector<std::int64_t>& coords() const { return c_; }

    bool is_zero() const {
        for (std::int64_t v : c_)
            if (v != 0) return false;
        return true;
    }
    bool is_nonnegative() const {
        for (std::int64_t v : c_)
            if (v < 0) return false;
        return true;
    }
    std::int64_t coordinate_sum() const {
        std::int64_t s = 0;
        for (std::int64_t v : c_) s = checked_add(s, v);
        return s;
    }

    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
        LatticeVector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c_[i] = checked_add(a.c_[i], b.c_[i]);
        return r;
    }
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
        LatticeVector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.c_[i] = checked_sub(a.c_[i], b.c_[i]);
        return r;
    }
    friend LatticeVector operator*(std::int64_t k, const LatticeVector& v) {
        LatticeVector r(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i) r.c_[i] = checked_mul(k, v.c_[i]);
        return r;
    }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
        return a.c_ <=> b.c_;
    }

    /// gcd of all coordinates; 0 only for the zero vector.
    std::int64_t content() const {
        std::int64_t g = 0;
        for (std::int64_t v : c_) g = std::gcd(g, v);
        return g;
    }

    /// The primitive vector spanning the same ray. Only meaningful for
    /// nonzero nonnegative vectors.
    LatticeVector primitive() const {
        std::int64_t g = content();
        LatticeVector r(dim());
        for (std::size_t i = 0; i < dim(); ++i) r.c_[i] = g == 0 ? 0 : c_[i] / g;
        return r;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

private:
    std::vector<std::int64_t> c_;
};

using RationalVector = std::vector<Rational>;

inline bool all_integral(const RationalVector& x) {
    for (const Rational& r : x)
        if (!r.is_integer()) return false;
    return true;
}

inline bool all_nonnegative(const RationalVector& x) {
    for (const Rational& r : x)
        if (r.is_negative()) return false;
    return true;
}

} // namespace sgclass
