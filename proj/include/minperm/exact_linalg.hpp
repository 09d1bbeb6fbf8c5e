#pragma once

// Exact integers, rationals, factorials and determinants.
//
// BigInt and Rational are Boost.Multiprecision's header-only cpp_int and
// cpp_rational. cpp_rational is always kept in lowest terms with a positive
// denominator, and zero is 0/1.

#include <cstddef>
#include <deque>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace minperm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/* Memoized factorials, owned by one computation context. Not shared between
 * threads: each worker of a parallel sweep holds its own table.
 */
class FactorialTable {
public:
    FactorialTable() : cache_{BigInt(1)} {}

    BigInt const& operator()(unsigned n)
    {
        while (cache_.size() <= n) {
            BigInt next = cache_.back() * static_cast<unsigned>(cache_.size());
            cache_.push_back(std::move(next));
        }
        return cache_[n];
    }

    // 1/m!, with the convention that a negative argument yields 0.
    Rational reciprocal(long long m)
    {
        if (m < 0)
            return Rational(0);
        return Rational(BigInt(1), (*this)(static_cast<unsigned>(m)));
    }

    std::size_t cached() const { return cache_.size(); }

private:
    std::deque<BigInt> cache_; // references stay valid as the table grows
};

class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t order) : order_(order), entries_(order * order)
    {
        if (order == 0)
            throw std::invalid_argument("ExactMatrix: order must be at least 1");
    }

    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
        : ExactMatrix(rows.size())
    {
        std::size_t i = 0;
        for (auto const& row : rows) {
            if (row.size() != order_)
                throw std::invalid_argument("ExactMatrix: rows must form a square matrix");
            std::size_t j = 0;
            for (auto const& x : row)
                at(i, j++) = x;
            ++i;
        }
    }

    static ExactMatrix identity(std::size_t order)
    {
        ExactMatrix m(order);
        for (std::size_t i = 0; i < order; ++i)
            m.at(i, i) = 1;
        return m;
    }

    std::size_t order() const { return order_; }

    // 0-based row and column.
    Rational& at(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
    Rational const& at(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    ExactMatrix transposed() const
    {
        ExactMatrix t(order_);
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = 0; j < order_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < order_; ++j)
            std::swap(at(a, j), at(b, j));
    }

    friend bool operator==(ExactMatrix const&, ExactMatrix const&) = default;

private:
    std::size_t order_;
    std::vector<Rational> entries_;
};

inline std::ostream& operator<<(std::ostream& os, ExactMatrix const& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.order(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.order(); ++j)
            os << (j ? "," : "") << m.at(i, j);
        os << ']';
    }
    return os << ']';
}

/* Exact determinant by Gaussian elimination over the rationals. The first
 * nonzero entry of each column is taken as pivot; every row swap flips the
 * sign. Orders 1 to 3 are expanded directly.
 */
inline Rational det_exact(ExactMatrix m)
{
    std::size_t const n = m.order();
    if (n == 1)
        return m.at(0, 0);
    if (n == 2)
        return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (n == 3) {
        return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1))
             - m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0))
             + m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    }

    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            m.swap_rows(pivot, col);
            det = -det;
        }
        Rational const& p = m.at(col, col);
        det *= p;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0)
                continue;
            Rational factor = m.at(r, col) / p;
            for (std::size_t c = col; c < n; ++c)
                m.at(r, c) -= factor * m.at(col, c);
        }
    }
    return det;
}

inline bool is_integer(Rational const& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

inline BigInt to_integer(Rational const& q)
{
    if (!is_integer(q))
        throw std::logic_error("expected an integral rational, got a fraction");
    return boost::multiprecision::numerator(q);
}

inline std::string to_decimal(BigInt const& x)
{
    return x.str();
}

} // namespace minperm
