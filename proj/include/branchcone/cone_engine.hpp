#ifndef BRANCHCONE_CONE_ENGINE_HPP
#define BRANCHCONE_CONE_ENGINE_HPP

#include "branchcone/branching.hpp"
#include "branchcone/polyhedra.hpp"
#include "branchcone/pullback.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace branchcone {

struct TypeOneDatum {
    bool hat_side;            // cover sits below w_hat rather than below w
    WeylElement below;        // v with v -> w (resp. v -> w_hat)
    std::size_t simple_index; // the simple root of the cover, 0-based
};

struct RayVector {
    QVec mu;      // fundamental-weight coordinates on the G side
    QVec mu_hat;  // fundamental-weight coordinates on the Ghat side
    std::string provenance;

    QVec full() const;
    ZVec key() const; // primitive integer form of the concatenated coords
    bool is_zero() const;
};

struct FacetDatum {
    std::size_t delta_index = 0; // position in the facet OPS list
    Coweight delta;              // on the G side (always dominant)
    WeylElement v_hat;           // standardizing conjugator
    Embedding std_emb;           // embedding with vhat applied
    WeylElement w, w_hat;        // minimal coset representatives, standardized basis
    ParabolicSupport support, support_hat;
    ZVec inequality;             // integer coefficients (a | b), sense <= 0
    std::vector<TypeOneDatum> covers;

    std::string provenance() const;
};

struct Prop63Result {
    std::size_t kernel_dim = 0;   // c
    std::size_t type_one_count = 0; // q
    std::size_t rank_hat = 0;
    std::size_t support_hat_size = 0;
    bool holds = false;
};

struct EngineOptions {
    std::size_t weyl_cap = 10000000;
    std::size_t recursion_budget = 16;
};

class ConeEngine {
public:
    explicit ConeEngine(Embedding emb, EngineOptions options = {});

    const Embedding& embedding() const { return emb_; }
    const EngineOptions& options() const { return options_; }

    // OPS sets: facet_ops is S (case B) or T (case A); ray_test_ops is T.
    const std::vector<Coweight>& facet_ops();
    const std::vector<Coweight>& ray_test_ops();

    const std::vector<FacetDatum>& facets();

    // Rays parallel to facet.covers.
    std::vector<RayVector> type_one_rays(const FacetDatum& facet) const;
    RayVector type_one_ray(const FacetDatum& facet, std::size_t cover_index) const;

    // Image under Ind of a Levi weight pair given in L^ss / Lhat^ss
    // fundamental coordinates (may be zero or non-extremal).
    RayVector induction(const FacetDatum& facet, const LeviPair& levi, const Weight& nu,
                        const Weight& nu_hat) const;

    std::vector<RayVector> type_two_rays(const FacetDatum& facet);

    // Accepted rays of the form (0, omegahat_j).
    std::vector<RayVector> fundamental_rays();
    // Acceptance status per j (true = extremal).
    std::vector<bool> fundamental_ray_status();

    const std::vector<RayVector>& all_extremal_rays();

    Prop63Result prop63_check(const FacetDatum& facet) const;

    // Full H-representation (dominance rows first, then facet rows flipped
    // to >= 0 sense).
    RationalCone inequality_system();
    std::size_t dominance_row_count() const;
    std::vector<ZVec> oracle_ray_vectors();

    bool is_member(const QVec& mu, const QVec& mu_hat);

private:
    void compute_facets();
    RayVector make_fundamental_ray(std::size_t j) const;

    Embedding emb_;
    EngineOptions options_;
    std::optional<std::vector<Coweight>> facet_ops_;
    std::optional<std::vector<Coweight>> ray_test_ops_;
    std::optional<std::vector<FacetDatum>> facets_;
    std::optional<std::vector<bool>> fundamental_status_;
    std::optional<std::vector<RayVector>> rays_;
    mutable std::mutex type_one_mutex_;
    mutable std::map<std::string, std::vector<RayVector>> type_one_cache_;
};

} // namespace branchcone

#endif
