#ifndef BRANCHCONE_REP_ORACLE_HPP
#define BRANCHCONE_REP_ORACLE_HPP

#include "branchcone/branching.hpp"
#include "branchcone/cone_engine.hpp"

#include <map>
#include <optional>

namespace branchcone {

// Brute-force character computations, exact and budgeted. The budget bounds
// the dimension of any single irreducible character.
class CharacterOracle {
public:
    explicit CharacterOracle(const WeylGroup& weyl, Int dim_budget = 1000000)
        : weyl_(weyl), dim_budget_(std::move(dim_budget))
    {
    }

    // Weyl dimension formula.
    Int dimension(const Weight& lambda) const;

    // Multiplicities of the dominant weights of V(lambda) (Freudenthal).
    std::map<QVec, Int> dominant_multiplicities(const Weight& lambda) const;

    // All weights with multiplicity (dominant table + Weyl orbits).
    std::map<QVec, Int> all_multiplicities(const Weight& lambda) const;

    // Full Weyl orbit of a weight.
    std::vector<Weight> orbit(const Weight& lambda) const;

    // Decompose an arbitrary character (weight -> multiplicity) into
    // irreducibles by highest-weight peeling.
    std::map<QVec, Int> decompose(std::map<QVec, Int> character) const;

private:
    const WeylGroup& weyl_;
    Int dim_budget_;
};

// dim (V(mu) tensor V(muhat))^G = multiplicity of V(mu)^* in V(muhat)|_G.
Int branch_multiplicity(const Embedding& emb, const Weight& mu, const Weight& mu_hat,
                        Int dim_budget = 1000000);

// Smallest N <= n_max with branch_multiplicity(N mu, N muhat) > 0.
std::optional<int> saturation_witness(const Embedding& emb, const Weight& mu,
                                      const Weight& mu_hat, int n_max,
                                      Int dim_budget = 1000000);

// dim (V_L(n chi_w) tensor V_Lhat(n chihat_what))^{L^ss} for a facet datum.
Int fulton_invariant_dim(const FacetDatum& facet, int n, Int dim_budget = 1000000);

} // namespace branchcone

#endif
