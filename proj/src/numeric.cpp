#include "snclab/numeric.hpp"

#include <utility>

namespace snclab {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto trim = [](std::string& t) {
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t'))
            t.pop_back();
        std::size_t i = 0;
        while (i < t.size() && (t[i] == ' ' || t[i] == '\t'))
            ++i;
        t.erase(0, i);
    };
    trim(s);
    if (s.empty())
        throw Error("empty rational literal");

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw Error("malformed rational literal: " + std::string(text));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::string denom = "1" + std::string(s.size() - dot - 1, '0');
        if (digits.empty() || digits == "-" || digits == "+")
            throw Error("malformed rational literal: " + std::string(text));
        s = digits + "/" + denom;
    }
    if (!s.empty() && s.front() == '+')
        s.erase(0, 1);

    Rational q;
    try {
        auto slash = s.find('/');
        Integer num(s.substr(0, slash), 10);
        Integer den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1), 10);
        if (den == 0)
            throw Error("zero denominator in rational literal: " + std::string(text));
        q = Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: " + std::string(text));
    }
    q.canonicalize();
    return q;
}

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value)
{
    Rational q = value;
    q.canonicalize();
    return q.get_str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw Error("ragged matrix literal");
        for (long v : row)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const
{
    for (const auto& v : data_)
        if (v != 0)
            return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error("matrix product dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Integer determinant(IntMatrix m)
{
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw Error("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(k, c), m(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

} // namespace snclab
