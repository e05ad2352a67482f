#ifndef BRANCHCONE_BRANCHING_HPP
#define BRANCHCONE_BRANCHING_HPP

#include "branchcone/polyhedra.hpp"
#include "branchcone/root_datum.hpp"
#include "branchcone/schubert.hpp"
#include "branchcone/weyl.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace branchcone {

// One group with its Weyl machinery and Schubert ring, shared by value
// semantics on the handle.
struct GroupContext {
    std::shared_ptr<const RootDatum> datum;
    std::shared_ptr<WeylGroup> weyl;
    std::shared_ptr<SchubertRing> ring;

    static GroupContext make(RootDatum d, std::size_t weyl_cap = 10000000);
};

// The embedding G -> Ghat at torus level: an integer matrix taking coroot
// coordinates of h into coroot coordinates of hhat. Weight restriction
// hhat* -> h* is its transpose on fundamental-weight coordinates.
class Embedding {
public:
    Embedding(GroupContext g, GroupContext g_hat, QMat coroot_map, std::string label);

    const GroupContext& g() const { return g_; }
    const GroupContext& g_hat() const { return g_hat_; }
    const RootDatum& datum() const { return *g_.datum; }
    const RootDatum& datum_hat() const { return *g_hat_.datum; }
    const QMat& coroot_map() const { return coroot_map_; }
    const QMat& restriction_matrix() const { return restriction_; }
    const std::string& label() const { return label_; }

    Weight restrict_weight(const Weight& lambda_hat) const;
    Coweight map_coweight(const Coweight& delta) const;

    // Multiset of h-weights of ghat/g as (weight, multiplicity) pairs sorted
    // by coordinates; throws on negative multiplicity (invalid data).
    std::vector<std::pair<Weight, long>> quotient_weights() const;

    enum class Case { A, B };
    Case case_classify() const;

    // The set S: special indivisible dominant one-parameter subgroups. In
    // case A this is the T construction.
    std::vector<Coweight> special_ops() const;
    // The set T: indivisible dominant OPS spanning extremal rays of some
    // chamber intersection h+ cap vhat hhat+.
    std::vector<Coweight> compatible_ops() const;
    // Whether Wt_h(ghat/g) = Wt_h(ghat) (as sets).
    bool weights_coincide() const;

    // Replace the coroot map by vhat . iota so that delta maps to a dominant
    // coweight of Ghat; returns the standardized embedding and vhat.
    std::pair<Embedding, WeylElement> standardize(const Coweight& delta) const;

private:
    void validate() const;

    GroupContext g_, g_hat_;
    QMat coroot_map_; // rhat x r, integer entries
    QMat restriction_; // transpose, r x rhat
    std::string label_;
};

// The Levi sub-embedding L^ss -> Lhat^ss attached to a standardized dominant
// delta, with the weight-lift maps back into h* x hhat*.
struct LeviPair {
    Embedding inner;
    ParabolicSupport support;     // Delta(P) in g, 0-based
    ParabolicSupport support_hat; // Delta(Phat) in ghat
    QMat lift_g;                  // r x |support|: lift of L^ss fundamental coords
    QMat lift_ghat;               // rhat x |support_hat|

    Weight lift_weight_g(const Weight& nu) const;
    Weight lift_weight_ghat(const Weight& nu_hat) const;
    // Restriction of a weight of h* to L^ss fundamental coordinates.
    Weight restrict_to_levi_g(const Weight& lambda) const;
    Weight restrict_to_levi_ghat(const Weight& lambda_hat) const;
};

LeviPair make_levi_pair(const Embedding& std_emb, const Coweight& delta);

// Builders.
Embedding build_diagonal(const std::string& type, std::size_t copies,
                         std::size_t weyl_cap = 10000000);
Embedding build_root_sl2(const std::string& ghat_type, std::size_t simple_index_1based,
                         std::size_t weyl_cap = 10000000);
Embedding build_principal_sl2(const std::string& ghat_type, std::size_t weyl_cap = 10000000);
Embedding build_dynkin_sl2(const std::string& ghat_type, const std::vector<long>& labels,
                           std::size_t weyl_cap = 10000000);
Embedding build_factor(const std::string& g_type, std::size_t copies, std::size_t slot_1based,
                       std::size_t weyl_cap = 10000000);
Embedding build_sp_in_sl(std::size_t n, std::size_t weyl_cap = 10000000);
Embedding build_explicit(const std::string& g_type, const std::string& ghat_type,
                         const std::vector<std::vector<long>>& coroot_map,
                         std::size_t weyl_cap = 10000000);

} // namespace branchcone

#endif
