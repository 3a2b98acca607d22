#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace snclab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "3", "-7/2" or "0.25" into a canonical rational.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms (the two-argument mpq_class constructor does not
/// reduce, and GMP arithmetic assumes reduced operands).
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Determinant by fraction-free Bareiss elimination. Square input only.
Integer determinant(IntMatrix m);

} // namespace snclab
