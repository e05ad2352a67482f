#ifndef BRANCHCONE_POLYNOMIAL_HPP
#define BRANCHCONE_POLYNOMIAL_HPP

#include "branchcone/rational.hpp"

#include <map>
#include <vector>

namespace branchcone {

// Sparse multivariate polynomial over Q. Variables are the fundamental-weight
// coordinates of some h*; a weight with coordinates l is the linear
// polynomial sum l_i x_i.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rat& c);
    static Polynomial linear(const QVec& coeffs);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    Rat constant_term() const;
    // Total degree; -1 for the zero polynomial.
    long degree() const;
    bool is_homogeneous() const;

    void add_term(const Exponents& e, const Rat& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const
    {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // Substitute variable i by the given linear form (same variable set).
    Polynomial substitute_var(std::size_t i, const QVec& form) const;

    // Map into a polynomial ring with new_nvars variables, sending variable j
    // to the linear form in column j of the (new_nvars x nvars) matrix.
    Polynomial substitute_all(const QMat& matrix, std::size_t new_nvars) const;

    // Exact division by a linear form; throws if not divisible.
    Polynomial divide_by_linear(const QVec& form) const;

    std::string to_string() const;

private:
    std::size_t nvars_;
    std::map<Exponents, Rat> terms_;
};

} // namespace branchcone

#endif
