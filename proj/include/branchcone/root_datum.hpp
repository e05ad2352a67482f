#ifndef BRANCHCONE_ROOT_DATUM_HPP
#define BRANCHCONE_ROOT_DATUM_HPP

#include "branchcone/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace branchcone {

// Coordinate conventions used throughout:
//
//   * Weights are stored in the fundamental-weight basis {omega_i}: a weight
//     lambda = sum l_i omega_i is the vector l. Simple root alpha_i has
//     coordinates = row i of the Cartan matrix A (A_ij = <alpha_i, alpha_j^vee>).
//   * Coweights are stored in the fundamental-coweight basis {x_i}
//     (alpha_j(x_i) = delta_ij): delta = sum d_i x_i is the vector d. The
//     coroot alpha_j^vee has coordinates = column j of A.
//   * <omega_i, x_j> = (A^{-1})_ij, so pair(lambda, delta) = l^T A^{-1} d.
//   * Coroot coordinates of a coweight (coefficients on {alpha_j^vee}) are
//     A^{-1} d; a one-parameter subgroup is a coweight whose coroot
//     coordinates are integers.
//
// All arithmetic is exact rational; nothing here uses floating point.

struct Weight {
    QVec coords; // fundamental-weight basis

    bool operator==(const Weight& o) const { return coords == o.coords; }
};

struct Coweight {
    QVec coords; // fundamental-coweight basis

    bool operator==(const Coweight& o) const { return coords == o.coords; }
};

class RootDatum {
public:
    // Construct from an explicit Cartan matrix (validated).
    explicit RootDatum(const std::vector<std::vector<long>>& cartan,
                       std::string label = "");

    // Parse a type descriptor: "A3", "C2", "B4", "D4", or products such as
    // "A1xA1". Rank-0 datum via "T0" (trivial group).
    static RootDatum from_type(const std::string& type);

    std::size_t rank() const { return rank_; }
    const QMat& cartan() const { return cartan_; }
    const QMat& cartan_inverse() const { return cartan_inv_; }
    const std::string& label() const { return label_; }

    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Coweight>& simple_coroots() const { return simple_coroots_; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    // positive_coroots()[k] is the coroot of positive_roots()[k].
    const std::vector<Coweight>& positive_coroots() const { return positive_coroots_; }
    const Weight& rho() const { return rho_; }
    Weight fundamental_weight(std::size_t i) const;
    Coweight fundamental_coweight(std::size_t i) const;
    Weight zero_weight() const { return Weight{QVec(rank_, 0)}; }
    Coweight zero_coweight() const { return Coweight{QVec(rank_, 0)}; }

    // Connected components of the Dynkin diagram, each a sorted list of
    // 0-based simple indices.
    const std::vector<std::vector<std::size_t>>& components() const { return components_; }

    Rat pair(const Weight& lambda, const Coweight& delta) const;

    bool is_dominant(const Weight& lambda) const;
    bool is_dominant_coweight(const Coweight& delta) const;
    bool is_integral(const Weight& lambda) const;

    // Coefficients of lambda on the simple roots (A^{-T} l).
    QVec root_basis_coords(const Weight& lambda) const;
    // Coefficients of delta on the simple coroots (A^{-1} d).
    QVec coroot_coords(const Coweight& delta) const;
    Coweight coweight_from_coroot_coords(const QVec& c) const;

    bool is_one_param(const Coweight& delta) const;
    // Scale a nonzero coweight so its coroot coordinates are integral with
    // gcd 1, preserving direction.
    Coweight indivisible(const Coweight& delta) const;

    // Symmetrized invariant form on weights, (lambda, mu); normalized so each
    // component's short roots have squared length 2.
    Rat form(const Weight& a, const Weight& b) const;

private:
    void finish_construction();

    std::size_t rank_ = 0;
    QMat cartan_, cartan_inv_, cartan_inv_t_;
    QMat form_gram_; // Gram matrix of the invariant form on the omega basis
    std::string label_;
    std::vector<Weight> simple_roots_;
    std::vector<Coweight> simple_coroots_;
    std::vector<Weight> positive_roots_;
    std::vector<Coweight> positive_coroots_;
    Weight rho_{QVec{}};
    std::vector<std::vector<std::size_t>> components_;
};

} // namespace branchcone

#endif
