#ifndef BRANCHCONE_RATIONAL_HPP
#define BRANCHCONE_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchcone {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Int>;

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

inline QMat identity_matrix(std::size_t n)
{
    QMat m(n, QVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline QVec mat_vec(const QMat& m, const QVec& v)
{
    QVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size())
            throw InvalidInput("mat_vec: dimension mismatch");
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += m[i][j] * v[j];
    }
    return out;
}

inline QMat mat_mul(const QMat& a, const QMat& b)
{
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat out(n, QVec(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k)
            throw InvalidInput("mat_mul: dimension mismatch");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] += a[i][t] * b[t][j];
        }
    }
    return out;
}

inline QMat mat_transpose(const QMat& a)
{
    if (a.empty())
        return {};
    QMat out(a[0].size(), QVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            out[j][i] = a[i][j];
    return out;
}

// Exact Gauss-Jordan inverse; throws on singular input.
QMat mat_inverse(const QMat& a);

// Rank over Q by Gaussian elimination.
std::size_t mat_rank(QMat a);

// Basis of the (right) nullspace of a, as rows.
QMat mat_nullspace(const QMat& a);

// Scale a rational vector to a primitive integer vector (gcd 1), preserving
// direction. Zero vector maps to zero.
ZVec primitive_vector(const QVec& v);

inline QVec to_qvec(const ZVec& v)
{
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rat(v[i]);
    return out;
}

inline bool all_integral(const QVec& v)
{
    for (const auto& x : v)
        if (x.get_den() != 1)
            return false;
    return true;
}

std::string to_string(const Rat& x);
std::string vec_to_string(const QVec& v);
std::string vec_to_string(const ZVec& v);

} // namespace branchcone

#endif
