#pragma once

#include "morseforest/complex.hpp"
#include "morseforest/error.hpp"
#include "morseforest/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace morseforest {

/// Dense row-major matrix of arbitrary-precision integers, optionally
/// labeled by cells.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        IntegerMatrix M(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw Error("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j)
                M(i, j) = rows[i][j];
        }
        return M;
    }

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix M(n, n);
        for (std::size_t i = 0; i < n; ++i)
            M(i, i) = 1;
        return M;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<Integer>& entries() const noexcept { return entries_; }

    const std::optional<std::vector<Cell>>& row_labels() const noexcept { return row_labels_; }
    const std::optional<std::vector<Cell>>& col_labels() const noexcept { return col_labels_; }

    void set_labels(std::vector<Cell> rows, std::vector<Cell> cols) {
        if (rows.size() != rows_ || cols.size() != cols_)
            throw Error("label count does not match matrix shape");
        row_labels_ = std::move(rows);
        col_labels_ = std::move(cols);
    }

    IntegerMatrix transpose() const {
        IntegerMatrix T(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                T(j, i) = (*this)(i, j);
        if (row_labels_ && col_labels_)
            T.set_labels(*col_labels_, *row_labels_);
        return T;
    }

    /// Rows and columns picked by index, in the order given.
    IntegerMatrix submatrix(const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) const {
        IntegerMatrix S(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                S(i, j) = (*this)(rows.at(i), cols.at(j));
        return S;
    }

    /// M + k I.
    IntegerMatrix shifted(const Integer& k) const {
        if (!is_square())
            throw Error("shift of a non-square matrix");
        IntegerMatrix S = *this;
        for (std::size_t i = 0; i < rows_; ++i)
            S(i, i) += k;
        return S;
    }

    bool is_symmetric() const {
        if (!is_square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0)
                return false;
        return true;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.cols_ != b.rows_)
            throw Error("matrix product shape mismatch");
        IntegerMatrix P(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& x = a(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    P(i, j) += x * b(k, j);
            }
        return P;
    }

    /// Entries only; labels do not take part in equality.
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
    std::optional<std::vector<Cell>> row_labels_;
    std::optional<std::vector<Cell>> col_labels_;
};

/// Integer polynomial in λ; coeffs[i] multiplies λ^i. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    IntegerPolynomial(std::initializer_list<long long> coeffs) {
        for (long long c : coeffs)
            coeffs_.emplace_back(c);
        trim();
    }

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Integer coeff(std::size_t power) const {
        return power < coeffs_.size() ? coeffs_[power] : Integer(0);
    }

    Integer operator()(const Integer& x) const {
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    /// Coefficients padded with zeros to the given length, ascending.
    std::vector<Integer> padded(std::size_t length) const {
        std::vector<Integer> out(std::max(length, coeffs_.size()));
        std::copy(coeffs_.begin(), coeffs_.end(), out.begin());
        return out;
    }

    friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        std::vector<Integer> c(n);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = a.coeff(i) - b.coeff(i);
        return IntegerPolynomial(std::move(c));
    }
    friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        std::vector<Integer> c(n);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = a.coeff(i) + b.coeff(i);
        return IntegerPolynomial(std::move(c));
    }
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntegerPolynomial(std::move(c));
    }

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

    /// Descending, e.g. "λ^4 + 8λ^3 + 20λ^2 + 16λ".
    std::string str(std::string_view var = "λ") const {
        if (coeffs_.empty())
            return "0";
        std::string s;
        for (int p = degree(); p >= 0; --p) {
            const Integer& c = coeffs_[static_cast<std::size_t>(p)];
            if (c == 0)
                continue;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (s.empty())
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            if (mag != 1 || p == 0)
                s += mag.str();
            if (p >= 1)
                s += std::string(var);
            if (p >= 2)
                s += "^" + std::to_string(p);
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }
    std::vector<Integer> coeffs_;
};

} // namespace morseforest
