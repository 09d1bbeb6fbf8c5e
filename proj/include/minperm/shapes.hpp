#pragma once

// Integer partitions, skew shapes, the composition <-> shape encoding for a
// fixed row overlap, skew tableaux (decreasing convention) and Aitken's
// determinant formula for counting them.
//
// Rows are indexed top to bottom. Row i of a skew shape lambda/mu occupies
// columns mu_i + 1 .. lambda_i. A tableau is filled with 1..N and strictly
// decreases left to right along rows and top to bottom along columns.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "exact_linalg.hpp"
#include "limits.hpp"

namespace minperm {

class IntegerPartition {
public:
    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("IntegerPartition: parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("IntegerPartition: parts must be weakly decreasing");
        }
    }

    std::vector<int> const& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(IntegerPartition const&, IntegerPartition const&) = default;

private:
    std::vector<int> parts_;
};

class SkewShape {
public:
    // inner may be shorter than outer; it is padded with zeros.
    SkewShape(std::vector<int> outer, std::vector<int> inner = {})
        : outer_(std::move(outer)), inner_(std::move(inner))
    {
        if (outer_.length() == 0)
            throw std::invalid_argument("SkewShape: outer partition is empty");
        if (inner_.size() > outer_.length())
            throw std::invalid_argument("SkewShape: inner partition has more rows than outer");
        inner_.resize(outer_.length(), 0);
        for (std::size_t i = 0; i < inner_.size(); ++i) {
            if (inner_[i] < 0)
                throw std::invalid_argument("SkewShape: inner parts must be nonnegative");
            if (i > 0 && inner_[i - 1] < inner_[i])
                throw std::invalid_argument("SkewShape: inner parts must be weakly decreasing");
            if (inner_[i] > outer_[i])
                throw std::invalid_argument("SkewShape: inner partition not contained in outer");
        }
        if (cells() < 1)
            throw std::invalid_argument("SkewShape: shape has no cells");
    }

    std::vector<int> const& outer() const { return outer_.parts(); }
    // Zero-padded to rows().
    std::vector<int> const& inner() const { return inner_; }
    std::size_t rows() const { return outer_.length(); }
    int row_length(std::size_t i) const { return outer_[i] - inner_[i]; }
    int cells() const { return outer_.size() - std::accumulate(inner_.begin(), inner_.end(), 0); }

    // Columns shared by rows i and i+1 (0-based i); negative means a gap.
    int overlap(std::size_t i) const { return outer_[i + 1] - inner_[i]; }

    // Consecutive rows share at least one column and no row is empty.
    bool is_connected() const
    {
        for (std::size_t i = 0; i < rows(); ++i)
            if (row_length(i) < 1)
                return false;
        for (std::size_t i = 0; i + 1 < rows(); ++i)
            if (overlap(i) < 1)
                return false;
        return true;
    }

    friend bool operator==(SkewShape const&, SkewShape const&) = default;

private:
    IntegerPartition outer_;
    std::vector<int> inner_;
};

namespace detail {

inline std::string join_ints(std::vector<int> const& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

inline std::vector<int> parse_int_list(std::string const& body)
{
    std::vector<int> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
        if (item.find_first_not_of(" \t") != std::string::npos)
            out.push_back(std::stoi(item));
    return out;
}

} // namespace detail

// "λ=[9,7,4,4] mu=[5,2,2,0]"
inline std::string to_text(SkewShape const& s)
{
    return "\xCE\xBB=" + detail::join_ints(s.outer()) + " mu=" + detail::join_ints(s.inner());
}

// Accepts the text form above; "lambda=" is accepted in place of "\xCE\xBB=".
inline SkewShape shape_from_text(std::string const& text)
{
    auto fail = [&] { return std::invalid_argument("shape_from_text: malformed shape \"" + text + "\""); };
    auto bracketed = [&](std::size_t from, std::size_t& end) {
        std::size_t const open = text.find('[', from);
        end = text.find(']', open);
        if (open == std::string::npos || end == std::string::npos)
            throw fail();
        std::string body = text.substr(open + 1, end - open - 1);
        if (body.find_first_not_of("0123456789, ") != std::string::npos)
            throw fail();
        return detail::parse_int_list(body);
    };
    std::size_t pos = text.find_first_not_of(' ');
    if (pos == std::string::npos)
        throw fail();
    if (text.compare(pos, 3, "\xCE\xBB=") == 0)
        pos += 3;
    else if (text.compare(pos, 7, "lambda=") == 0)
        pos += 7;
    else
        throw fail();
    if (text[pos] != '[')
        throw fail();
    std::size_t end = 0;
    auto outer = bracketed(pos, end);
    std::size_t const mu = text.find_first_not_of(' ', end + 1);
    if (mu == std::string::npos || mu == end + 1 || text.compare(mu, 4, "mu=[") != 0)
        throw fail();
    auto inner = bracketed(mu + 3, end);
    if (text.find_first_not_of(' ', end + 1) != std::string::npos)
        throw fail();
    return SkewShape(std::move(outer), std::move(inner));
}

inline nlohmann::ordered_json to_json(SkewShape const& s)
{
    return {{"outer", s.outer()}, {"inner", s.inner()}};
}

inline SkewShape shape_from_json(nlohmann::json const& j)
{
    return SkewShape(j.at("outer").get<std::vector<int>>(), j.at("inner").get<std::vector<int>>());
}

inline std::ostream& operator<<(std::ostream& os, SkewShape const& s)
{
    return os << to_text(s);
}

/* Row lengths a_1..a_k, top row first. Which lower bound applies depends on
 * the overlap h in force: see check_composition.
 */
class Composition {
public:
    explicit Composition(std::vector<int> rows) : rows_(std::move(rows))
    {
        if (rows_.empty())
            throw std::invalid_argument("Composition: needs at least one part");
        for (int a : rows_)
            if (a < 1)
                throw std::invalid_argument("Composition: parts must be positive");
    }
    Composition(std::initializer_list<int> rows) : Composition(std::vector<int>(rows)) {}

    std::vector<int> const& rows() const { return rows_; }
    std::size_t length() const { return rows_.size(); }
    int total() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }
    int operator[](std::size_t i) const { return rows_[i]; }

    friend bool operator==(Composition const&, Composition const&) = default;
    friend auto operator<=>(Composition const&, Composition const&) = default;

private:
    std::vector<int> rows_;
};

inline std::ostream& operator<<(std::ostream& os, Composition const& a)
{
    return os << detail::join_ints(a.rows());
}

// Smallest admissible part for overlap h: a row that shares h columns with a
// neighbour needs at least h cells. A lone row has no neighbour.
inline int min_part_for(int h, std::size_t rows)
{
    return rows >= 2 ? std::max(h, 1) : 1;
}

inline void check_composition(Composition const& a, int h)
{
    if (h < 0)
        throw std::invalid_argument("overlap h must be nonnegative");
    int const lo = min_part_for(h, a.length());
    for (std::size_t i = 0; i < a.length(); ++i)
        if (a[i] < lo)
            throw std::invalid_argument("composition part a_" + std::to_string(i + 1) + " = " + std::to_string(a[i])
                                        + " is below the minimum " + std::to_string(lo) + " for overlap h = "
                                        + std::to_string(h));
}

inline SkewShape shape_from_composition(Composition const& a, int h)
{
    check_composition(a, h);
    std::size_t const k = a.length();
    std::vector<int> lambda(k), mu(k, 0);
    lambda[k - 1] = a[k - 1];
    for (std::size_t i = k - 1; i-- > 0;) {
        lambda[i] = a[i] + lambda[i + 1] - h;
        mu[i] = lambda[i + 1] - h;
    }
    return SkewShape(std::move(lambda), std::move(mu));
}

inline Composition composition_from_shape(SkewShape const& s, int h)
{
    std::size_t const k = s.rows();
    if (s.inner()[k - 1] != 0)
        throw std::invalid_argument("composition_from_shape: bottom row must start in column 1");
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (s.overlap(i) != h)
            throw std::invalid_argument("composition_from_shape: rows " + std::to_string(i + 1) + " and "
                                        + std::to_string(i + 2) + " share " + std::to_string(s.overlap(i))
                                        + " columns, expected " + std::to_string(h));
    std::vector<int> a(k);
    for (std::size_t i = 0; i < k; ++i)
        a[i] = s.row_length(i);
    Composition c(std::move(a));
    check_composition(c, h);
    return c;
}

// Entry (i,j) = 1/(lambda_i - mu_j - i + j)!, zero for a negative argument.
inline ExactMatrix aitken_matrix(SkewShape const& s, FactorialTable& fact)
{
    std::size_t const n = s.rows();
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = fact.reciprocal(static_cast<long long>(s.outer()[i]) - s.inner()[j]
                                         - static_cast<long long>(i) + static_cast<long long>(j));
    return m;
}

inline ExactMatrix aitken_matrix(SkewShape const& s)
{
    FactorialTable fact;
    return aitken_matrix(s, fact);
}

inline BigInt aitken_count(SkewShape const& s, FactorialTable& fact)
{
    Rational value = Rational(fact(static_cast<unsigned>(s.cells()))) * det_exact(aitken_matrix(s, fact));
    if (!is_integer(value) || value < 0)
        throw std::logic_error("aitken_count: N! det is not a nonnegative integer for " + to_text(s));
    return to_integer(value);
}

inline BigInt aitken_count(SkewShape const& s)
{
    FactorialTable fact;
    return aitken_count(s, fact);
}

struct SkewTableau {
    SkewShape shape;
    // rows[i] lists row i (top first) left to right.
    std::vector<std::vector<int>> rows;

    SkewTableau(SkewShape s, std::vector<std::vector<int>> r) : shape(std::move(s)), rows(std::move(r))
    {
        if (rows.size() != shape.rows())
            throw std::invalid_argument("SkewTableau: row count does not match shape");
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(rows[i].size()) != shape.row_length(i))
                throw std::invalid_argument("SkewTableau: row " + std::to_string(i + 1)
                                            + " length does not match shape");
    }

    // Value in row i at absolute 1-based column c; 0 if the cell is outside the row.
    int at(std::size_t i, int c) const
    {
        int const start = shape.inner()[i] + 1;
        if (c < start || c > shape.outer()[i])
            return 0;
        return rows[i][static_cast<std::size_t>(c - start)];
    }

    friend bool operator==(SkewTableau const&, SkewTableau const&) = default;
};

inline std::ostream& operator<<(std::ostream& os, SkewTableau const& t)
{
    os << to_text(t.shape) << " rows=";
    for (auto const& r : t.rows)
        os << detail::join_ints(r);
    return os;
}

inline bool is_valid_tableau(SkewTableau const& t)
{
    int const n = t.shape.cells();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (auto const& row : t.rows)
        for (int v : row) {
            if (v < 1 || v > n || seen[v])
                return false;
            seen[v] = true;
        }
    for (auto const& row : t.rows)
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] <= row[j + 1])
                return false;
    for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
        int const lo = t.shape.inner()[i] + 1;
        int const hi = t.shape.outer()[i + 1];
        for (int c = std::max(lo, t.shape.inner()[i + 1] + 1); c <= hi; ++c)
            if (t.at(i, c) <= t.at(i + 1, c))
                return false;
    }
    return true;
}

namespace detail {

// Values are placed from N down to 1; a cell accepts the next value once its
// left and upper neighbours (when inside the shape) are filled.
template <typename OnComplete>
void fill_decreasing(SkewShape const& s, std::vector<std::vector<int>>& rows, int value, OnComplete& done)
{
    if (value == 0) {
        done(rows);
        return;
    }
    std::size_t const k = s.rows();
    for (std::size_t i = 0; i < k; ++i) {
        int const filled = static_cast<int>(rows[i].size());
        if (filled == s.row_length(i))
            continue;
        int const col = s.inner()[i] + filled + 1;
        if (i > 0 && col > s.inner()[i - 1] && s.inner()[i - 1] + static_cast<int>(rows[i - 1].size()) < col)
            continue;
        rows[i].push_back(value);
        fill_decreasing(s, rows, value - 1, done);
        rows[i].pop_back();
    }
}

template <typename OnComplete>
void fill_all(SkewShape const& s, int cell_limit, OnComplete done)
{
    if (s.cells() > cell_limit)
        throw resource_error("generate_tableaux: " + std::to_string(s.cells()) + " cells exceeds the limit "
                             + std::to_string(cell_limit));
    std::vector<std::vector<int>> rows(s.rows());
    for (std::size_t i = 0; i < s.rows(); ++i)
        rows[i].reserve(static_cast<std::size_t>(s.row_length(i)));
    fill_decreasing(s, rows, s.cells(), done);
}

} // namespace detail

// Visits every decreasing filling of s exactly once.
inline void for_each_tableau(SkewShape const& s, std::function<void(SkewTableau const&)> const& visit,
                             int cell_limit = default_tableau_cell_limit)
{
    detail::fill_all(s, cell_limit, [&](std::vector<std::vector<int>> const& rows) { visit(SkewTableau(s, rows)); });
}

inline std::vector<SkewTableau> generate_tableaux(SkewShape const& s, int cell_limit = default_tableau_cell_limit)
{
    std::vector<SkewTableau> out;
    for_each_tableau(s, [&](SkewTableau const& t) { out.push_back(t); }, cell_limit);
    return out;
}

inline std::uint64_t count_tableaux(SkewShape const& s, int cell_limit = default_tableau_cell_limit)
{
    std::uint64_t n = 0;
    detail::fill_all(s, cell_limit, [&](std::vector<std::vector<int>> const&) { ++n; });
    return n;
}

// v -> N+1-v turns a decreasing tableau into a classical increasing one.
inline SkewTableau complement(SkewTableau t)
{
    int const n = t.shape.cells();
    for (auto& row : t.rows)
        for (int& v : row)
            v = n + 1 - v;
    return t;
}

} // namespace minperm
