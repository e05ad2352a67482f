#include "branchcone/rational.hpp"

#include <sstream>

namespace branchcone {

QMat mat_inverse(const QMat& a)
{
    std::size_t n = a.size();
    QMat m = a;
    QMat inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw InvalidInput("mat_inverse: singular matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rat p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0)
                continue;
            Rat f = m[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::size_t mat_rank(QMat a)
{
    std::size_t rows = a.size();
    if (rows == 0)
        return 0;
    std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0)
                continue;
            Rat f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

QMat mat_nullspace(const QMat& a)
{
    if (a.empty())
        return {};
    std::size_t rows = a.size(), cols = a[0].size();
    QMat m = a;
    std::vector<long> pivot_col(rows, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        Rat p = m[rank][col];
        for (std::size_t j = 0; j < cols; ++j)
            m[rank][j] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0)
                continue;
            Rat f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] -= f * m[rank][j];
        }
        pivot_col[rank] = static_cast<long>(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < rank; ++i)
        is_pivot[static_cast<std::size_t>(pivot_col[i])] = true;
    QMat basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        QVec v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rank; ++i)
            v[static_cast<std::size_t>(pivot_col[i])] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

ZVec primitive_vector(const QVec& v)
{
    Int lcm_den = 1;
    for (const auto& x : v)
        lcm_den = lcm(lcm_den, x.get_den());
    ZVec out(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm_den);
        out[i] = scaled.get_num(); // canonical form has denominator 1 here
        g = gcd(g, out[i]);
    }
    if (g != 0)
        for (auto& x : out)
            x /= g;
    return out;
}

std::string to_string(const Rat& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string vec_to_string(const QVec& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string vec_to_string(const ZVec& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

} // namespace branchcone
