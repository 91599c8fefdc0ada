#ifndef COTANGENT_ORACLE_MATRIX_HPP
#define COTANGENT_ORACLE_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "../numeric.hpp"

namespace cotangent::oracle {

/// Sparse matrix over Q. Rows are kept as ordered maps; no zero is stored.
class RationalMatrix
{
public:
    using Row = std::map<std::size_t, Rational>;

    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Row>& row_data() const noexcept { return rows_; }

    void add(std::size_t r, std::size_t c, const Rational& v)
    {
        if (r >= rows_.size() || c >= cols_)
            throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
        if (v == 0)
            return;
        auto [it, inserted] = rows_[r].try_emplace(c, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0)
                rows_[r].erase(it);
        }
    }

    Rational at(std::size_t r, std::size_t c) const
    {
        const auto& row = rows_.at(r);
        auto it = row.find(c);
        return it == row.end() ? Rational(0) : it->second;
    }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& row : rows_)
            n += row.size();
        return n;
    }

    bool is_zero() const
    {
        return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
    }

    /// [a; b]
    friend RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b)
    {
        if (a.cols_ != b.cols_)
            throw std::invalid_argument("vstack: column counts differ");
        RationalMatrix out = a;
        out.rows_.insert(out.rows_.end(), b.rows_.begin(), b.rows_.end());
        return out;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
    {
        if (a.cols_ != b.rows())
            throw std::invalid_argument("matrix product: inner dimensions differ");
        RationalMatrix out(a.rows(), b.cols_);
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (const auto& [k, v] : a.rows_[r])
                for (const auto& [c, w] : b.rows_[k])
                    out.add(r, c, v * w);
        return out;
    }

private:
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
};

namespace detail {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

inline IntRow to_primitive_integer_row(const RationalMatrix::Row& row)
{
    Integer scale = 1;
    for (const auto& [c, v] : row)
        scale = boost::multiprecision::lcm(scale, Integer(boost::multiprecision::denominator(v)));
    IntRow out;
    out.reserve(row.size());
    Integer g = 0;
    for (const auto& [c, v] : row) {
        Integer x = boost::multiprecision::numerator(v) * (scale / boost::multiprecision::denominator(v));
        g = boost::multiprecision::gcd(g, x);
        out.emplace_back(c, std::move(x));
    }
    if (g > 1)
        for (auto& [c, x] : out)
            x /= g;
    return out;
}

// row <- p * row - q * pivot with p = pivot lead, q = row lead, then divide
// by the content. The leading entry cancels.
inline IntRow eliminate(const IntRow& row, const IntRow& pivot)
{
    const Integer p = pivot.front().second;
    const Integer q = row.front().second;
    const Integer g = boost::multiprecision::gcd(p, q);
    const Integer ps = p / g;
    const Integer qs = q / g;
    IntRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t a = 1, b = 1;
    while (a < row.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
            out.emplace_back(row[a].first, ps * row[a].second);
            ++a;
        } else if (a == row.size() || pivot[b].first < row[a].first) {
            out.emplace_back(pivot[b].first, -qs * pivot[b].second);
            ++b;
        } else {
            Integer x = ps * row[a].second - qs * pivot[b].second;
            if (x != 0)
                out.emplace_back(row[a].first, std::move(x));
            ++a;
            ++b;
        }
    }
    Integer content = 0;
    for (const auto& [c, x] : out) {
        content = boost::multiprecision::gcd(content, x);
        if (content == 1)
            break;
    }
    if (content > 1)
        for (auto& [c, x] : out)
            x /= content;
    return out;
}

} // namespace detail

/// Exact rank over Q: sparse fraction-free elimination, rows scaled to
/// primitive integer vectors, sparsest rows first.
inline std::size_t rank(const RationalMatrix& m)
{
    std::vector<detail::IntRow> rows;
    rows.reserve(m.rows());
    for (const auto& row : m.row_data())
        if (!row.empty())
            rows.push_back(detail::to_primitive_integer_row(row));
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    std::map<std::size_t, detail::IntRow> pivots;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                const std::size_t lead = row.front().first;
                pivots.emplace(lead, std::move(row));
                break;
            }
            row = detail::eliminate(row, it->second);
        }
    }
    return pivots.size();
}

/// Debug form {"rows":..., "cols":..., "entries":[[r,c,"p/q"], ...]}.
inline nlohmann::json to_json(const RationalMatrix& m)
{
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto entries = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row_data()[r])
            entries.push_back({r, c, cotangent::to_string(v)});
    j["entries"] = std::move(entries);
    return j;
}

} // namespace cotangent::oracle

#endif
