#ifndef BRANCHCONE_SCHUBERT_HPP
#define BRANCHCONE_SCHUBERT_HPP

#include "branchcone/polynomial.hpp"
#include "branchcone/weyl.hpp"

#include <map>
#include <mutex>
#include <string>

namespace branchcone {

// A cohomology class of G/P in the Schubert basis: coefficients on the
// classes [X_w], w in W^P, where X_w has dimension l(w). Keys are canonical
// reduced words, so iteration order is deterministic.
struct SchubertClass {
    ParabolicSupport support;
    std::map<std::vector<std::size_t>, Rat> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    Rat coefficient(const WeylElement& w) const
    {
        auto it = coeffs.find(w.word);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
    std::string to_string() const;
};

// Borel-model Schubert calculus for one group. BGG polynomials are memoized;
// the cache is guarded for concurrent readers.
class SchubertRing {
public:
    explicit SchubertRing(const WeylGroup& weyl) : weyl_(weyl) {}

    const WeylGroup& weyl() const { return weyl_; }

    // A_i f = (f - s_i f) / alpha_i.
    Polynomial divided_difference(std::size_t i, const Polynomial& f) const;

    // Apply divided differences along the canonical reduced word of w,
    // leftmost letter first.
    Polynomial apply_chain(const WeylElement& w, const Polynomial& f) const;

    // BGG polynomial: homogeneous of degree l(w), P_e = 1, and
    // A_i P_w = P_{s_i w} whenever the length drops.
    Polynomial bgg(const WeylElement& w) const;

    // Polynomial representing the class [X_w] of the Schubert variety of
    // dimension l(w) in G/P: bgg(w0^P * w^{-1} * w0), homogeneous of degree
    // dim G/P - l(w).
    Polynomial class_polynomial(const WeylElement& w, const ParabolicSupport& support) const;

    // Expand a homogeneous polynomial in the Schubert basis of G/P. The
    // coefficient of [X_w] is the constant term of the extraction chain for
    // the index element w0^P * w^{-1} * w0.
    SchubertClass expand(const Polynomial& f, const ParabolicSupport& support) const;

    // Structure constant of [X_target] in [X_u] * [X_v] over G/P.
    Rat cup_coefficient(const WeylElement& u, const WeylElement& v,
                        const WeylElement& target, const ParabolicSupport& support) const;

    // Coefficient of [X_e] (the point class) in c * [X_w] for a class c.
    Rat point_coefficient(const SchubertClass& c, const WeylElement& w) const;

    // rho - 2 rho_L + w^{-1} rho.
    Weight chi_weight(const WeylElement& w, const ParabolicSupport& support) const;
    Weight rho_levi(const ParabolicSupport& support) const;

    Polynomial weight_polynomial(const Weight& lambda) const
    {
        return Polynomial::linear(lambda.coords);
    }

private:
    const WeylGroup& weyl_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<std::size_t>, Polynomial> bgg_cache_;
};

} // namespace branchcone

#endif
