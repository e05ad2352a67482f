#include "branchcone/cone_engine.hpp"

#include <algorithm>
#include <sstream>

namespace branchcone {

QVec RayVector::full() const
{
    QVec out = mu;
    out.insert(out.end(), mu_hat.begin(), mu_hat.end());
    return out;
}

ZVec RayVector::key() const
{
    return primitive_vector(full());
}

bool RayVector::is_zero() const
{
    for (const auto& x : mu)
        if (x != 0)
            return false;
    for (const auto& x : mu_hat)
        if (x != 0)
            return false;
    return true;
}

std::string FacetDatum::provenance() const
{
    std::ostringstream os;
    os << "(" << word_to_string(w.word) << ", " << word_to_string(w_hat.word, true) << ")";
    return os.str();
}

ConeEngine::ConeEngine(Embedding emb, EngineOptions options)
    : emb_(std::move(emb)), options_(options)
{
    if (options_.recursion_budget == 0)
        throw BudgetError("Levi recursion budget exhausted");
}

const std::vector<Coweight>& ConeEngine::facet_ops()
{
    if (!facet_ops_)
        facet_ops_ = emb_.special_ops();
    return *facet_ops_;
}

const std::vector<Coweight>& ConeEngine::ray_test_ops()
{
    if (!ray_test_ops_) {
        if (emb_.case_classify() == Embedding::Case::A)
            ray_test_ops_ = facet_ops();
        else
            ray_test_ops_ = emb_.compatible_ops();
    }
    return *ray_test_ops_;
}

void ConeEngine::compute_facets()
{
    if (facets_)
        return;
    std::vector<FacetDatum> out;
    const auto& ops = facet_ops();
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const Coweight& delta = ops[k];
        auto [std_emb, vhat] = emb_.standardize(delta);
        Coweight image = std_emb.map_coweight(delta);
        const auto& weyl = *std_emb.g().weyl;
        const auto& weyl_hat = *std_emb.g_hat().weyl;
        ParabolicSupport sup = weyl.stabilizer_support(delta);
        ParabolicSupport sup_hat = weyl_hat.stabilizer_support(image);
        std::size_t dim_hat = weyl_hat.dim_flag_variety(sup_hat);
        auto reps = weyl.min_coset_reps(sup);
        auto reps_hat = weyl_hat.min_coset_reps(sup_hat);
        for (const auto& w : reps) {
            for (const auto& w_hat : reps_hat) {
                if (w.length + w_hat.length != dim_hat)
                    continue;
                if (!is_facet_pair(std_emb, w, w_hat, delta))
                    continue;
                FacetDatum f{k,       delta, vhat,    std_emb, w,
                             w_hat,   sup,   sup_hat, {},      {}};
                // Inequality in original coordinates: the standardized
                // picture evaluates the original pairings directly.
                Coweight wdelta = weyl.act(w, delta);
                Coweight whimage = weyl_hat.act(w_hat, image);
                QVec row;
                for (std::size_t i = 0; i < emb_.datum().rank(); ++i)
                    row.push_back(emb_.datum().pair(emb_.datum().fundamental_weight(i), wdelta));
                for (std::size_t j = 0; j < emb_.datum_hat().rank(); ++j)
                    row.push_back(
                        emb_.datum_hat().pair(emb_.datum_hat().fundamental_weight(j), whimage));
                f.inequality = primitive_vector(row);
                // Simple-root Bruhat covers below w and w_hat.
                for (const auto& c : weyl.covers_below(w))
                    if (c.simple)
                        f.covers.push_back(TypeOneDatum{false, c.below, c.simple_index});
                for (const auto& c : weyl_hat.covers_below(w_hat))
                    if (c.simple)
                        f.covers.push_back(TypeOneDatum{true, c.below, c.simple_index});
                out.push_back(std::move(f));
            }
        }
    }

    if (emb_.case_classify() == Embedding::Case::A && !out.empty()) {
        // The inequality list is not claimed irredundant in case A; prune it.
        std::size_t dim = emb_.datum().rank() + emb_.datum_hat().rank();
        std::vector<ZVec> rows;
        for (std::size_t i = 0; i < dim; ++i) {
            ZVec e(dim, 0);
            e[i] = 1;
            rows.push_back(std::move(e));
        }
        for (const auto& f : out) {
            ZVec flipped = f.inequality;
            for (auto& x : flipped)
                x = -x;
            rows.push_back(std::move(flipped));
        }
        RationalCone cone(dim, rows);
        auto dropped = cone.redundant_rows(dim);
        std::set<std::size_t> drop;
        for (std::size_t idx : dropped)
            drop.insert(idx - dim);
        std::vector<FacetDatum> kept;
        for (std::size_t i = 0; i < out.size(); ++i)
            if (!drop.count(i))
                kept.push_back(std::move(out[i]));
        out = std::move(kept);
    }
    facets_ = std::move(out);
}

const std::vector<FacetDatum>& ConeEngine::facets()
{
    compute_facets();
    return *facets_;
}

RayVector ConeEngine::type_one_ray(const FacetDatum& facet, std::size_t cover_index) const
{
    const TypeOneDatum& datum = facet.covers.at(cover_index);
    const auto& weyl = *facet.std_emb.g().weyl;
    const auto& weyl_hat = *facet.std_emb.g_hat().weyl;
    WeylElement u = datum.hat_side ? facet.w : datum.below;
    WeylElement u_hat = datum.hat_side ? datum.below : facet.w_hat;

    RayVector ray;
    ray.mu.assign(emb_.datum().rank(), 0);
    ray.mu_hat.assign(emb_.datum_hat().rank(), 0);
    SchubertClass pulled = pullback(facet.std_emb, u_hat, facet.delta);
    for (std::size_t k = 0; k < emb_.datum().rank(); ++k) {
        WeylElement up = weyl.multiply(weyl.simple_reflection(k), u);
        if (up.length != u.length + 1 || !weyl.is_min_coset_rep(up, facet.support))
            continue;
        ray.mu[k] = facet.std_emb.g().ring->point_coefficient(pulled, up);
    }
    for (std::size_t k = 0; k < emb_.datum_hat().rank(); ++k) {
        WeylElement up = weyl_hat.multiply(weyl_hat.simple_reflection(k), u_hat);
        if (up.length != u_hat.length + 1 ||
            !weyl_hat.is_min_coset_rep(up, facet.support_hat))
            continue;
        ray.mu_hat[k] = facet_product_coefficient(facet.std_emb, u, up, facet.delta);
    }
    std::ostringstream os;
    os << "typeI " << facet.provenance() << " via "
       << (datum.hat_side ? "alphahat" : "alpha") << (datum.simple_index + 1);
    ray.provenance = os.str();
    return ray;
}

std::vector<RayVector> ConeEngine::type_one_rays(const FacetDatum& facet) const
{
    std::ostringstream key;
    key << facet.delta_index << "|" << word_to_string(facet.w.word) << "|"
        << word_to_string(facet.w_hat.word);
    {
        std::lock_guard<std::mutex> lock(type_one_mutex_);
        auto it = type_one_cache_.find(key.str());
        if (it != type_one_cache_.end())
            return it->second;
    }
    std::vector<RayVector> out;
    for (std::size_t i = 0; i < facet.covers.size(); ++i)
        out.push_back(type_one_ray(facet, i));
    std::lock_guard<std::mutex> lock(type_one_mutex_);
    type_one_cache_.emplace(key.str(), out);
    return out;
}

RayVector ConeEngine::induction(const FacetDatum& facet, const LeviPair& levi, const Weight& nu,
                                const Weight& nu_hat) const
{
    const auto& weyl = *facet.std_emb.g().weyl;
    const auto& weyl_hat = *facet.std_emb.g_hat().weyl;
    Weight lift = levi.lift_weight_g(nu);
    Weight lift_hat = levi.lift_weight_ghat(nu_hat);
    Weight wl = weyl.act(facet.w, lift);
    Weight whl = weyl_hat.act(facet.w_hat, lift_hat);

    RayVector out;
    out.mu = wl.coords;
    out.mu_hat = whl.coords;
    auto type_one = type_one_rays(facet);
    for (std::size_t t = 0; t < facet.covers.size(); ++t) {
        const TypeOneDatum& d = facet.covers[t];
        Rat coeff = d.hat_side ? whl.coords[d.simple_index] : wl.coords[d.simple_index];
        if (coeff == 0)
            continue;
        for (std::size_t i = 0; i < out.mu.size(); ++i)
            out.mu[i] -= coeff * type_one[t].mu[i];
        for (std::size_t i = 0; i < out.mu_hat.size(); ++i)
            out.mu_hat[i] -= coeff * type_one[t].mu_hat[i];
    }
    out.provenance = "typeII " + facet.provenance();
    return out;
}

std::vector<RayVector> ConeEngine::type_two_rays(const FacetDatum& facet)
{
    std::vector<RayVector> out;
    LeviPair levi = make_levi_pair(facet.std_emb, facet.delta);
    if (levi.inner.datum_hat().rank() == 0)
        return out; // both Levis are tori: the inner cone is trivial
    EngineOptions inner_options = options_;
    inner_options.recursion_budget -= 1;
    ConeEngine inner(levi.inner, inner_options);
    RationalCone system = inequality_system();
    for (const auto& levi_ray : inner.all_extremal_rays()) {
        RayVector image = induction(facet, levi, Weight{levi_ray.mu}, Weight{levi_ray.mu_hat});
        if (image.is_zero())
            continue;
        if (!system.is_extremal_ray(image.full()))
            continue;
        bool dup = false;
        for (const auto& r : out)
            if (r.key() == image.key())
                dup = true;
        if (!dup)
            out.push_back(std::move(image));
    }
    return out;
}

RayVector ConeEngine::make_fundamental_ray(std::size_t j) const
{
    RayVector ray;
    ray.mu.assign(emb_.datum().rank(), 0);
    ray.mu_hat.assign(emb_.datum_hat().rank(), 0);
    ray.mu_hat[j] = 1;
    ray.provenance = "fundamental omegahat" + std::to_string(j + 1);
    return ray;
}

std::vector<bool> ConeEngine::fundamental_ray_status()
{
    if (fundamental_status_)
        return *fundamental_status_;
    std::size_t rh = emb_.datum_hat().rank();
    std::vector<bool> accepted(rh, true);
    // Candidate pairs (delta, what) with phi^odot[Xhat_what] = [X_e]; for
    // each, the set of simple indices i with Xhat_what strictly contained in
    // Xhat_{s_i what}, and the pairing values omegahat_j(what . iota(delta)).
    for (const Coweight& delta : ray_test_ops()) {
        auto [std_emb, vhat] = emb_.standardize(delta);
        Coweight image = std_emb.map_coweight(delta);
        const auto& weyl = *std_emb.g().weyl;
        const auto& weyl_hat = *std_emb.g_hat().weyl;
        ParabolicSupport sup = weyl.stabilizer_support(delta);
        ParabolicSupport sup_hat = weyl_hat.stabilizer_support(image);
        long len = static_cast<long>(weyl_hat.dim_flag_variety(sup_hat)) -
                   static_cast<long>(weyl.dim_flag_variety(sup));
        if (len < 0)
            continue;
        WeylElement w_top =
            weyl.multiply(weyl.longest_element(), weyl.longest_element(sup));
        for (const auto& w_hat : weyl_hat.min_coset_reps(sup_hat)) {
            if (static_cast<long>(w_hat.length) != len)
                continue;
            if (!is_facet_pair(std_emb, w_top, w_hat, delta))
                continue;
            std::vector<std::size_t> up;
            for (std::size_t i = 0; i < emb_.datum_hat().rank(); ++i) {
                WeylElement m = weyl_hat.coset_min_rep(
                    weyl_hat.multiply(weyl_hat.simple_reflection(i), w_hat), sup_hat);
                if (m.length == w_hat.length + 1)
                    up.push_back(i);
            }
            Coweight whimage = weyl_hat.act(w_hat, image);
            for (std::size_t j = 0; j < rh; ++j) {
                bool in_sj = true;
                for (std::size_t i : up)
                    if (i != j)
                        in_sj = false;
                if (!in_sj)
                    continue;
                Rat v = emb_.datum_hat().pair(emb_.datum_hat().fundamental_weight(j), whimage);
                if (v > 0)
                    accepted[j] = false;
            }
        }
    }
    fundamental_status_ = accepted;
    return accepted;
}

std::vector<RayVector> ConeEngine::fundamental_rays()
{
    std::vector<RayVector> out;
    auto status = fundamental_ray_status();
    for (std::size_t j = 0; j < status.size(); ++j)
        if (status[j])
            out.push_back(make_fundamental_ray(j));
    return out;
}

std::size_t ConeEngine::dominance_row_count() const
{
    return emb_.datum().rank() + emb_.datum_hat().rank();
}

RationalCone ConeEngine::inequality_system()
{
    std::size_t dim = dominance_row_count();
    std::vector<ZVec> rows;
    for (std::size_t i = 0; i < dim; ++i) {
        ZVec e(dim, 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    for (const auto& f : facets()) {
        ZVec flipped = f.inequality;
        for (auto& x : flipped)
            x = -x;
        rows.push_back(std::move(flipped));
    }
    return RationalCone(dim, std::move(rows));
}

std::vector<ZVec> ConeEngine::oracle_ray_vectors()
{
    return inequality_system().vrep().rays;
}

bool ConeEngine::is_member(const QVec& mu, const QVec& mu_hat)
{
    QVec x = mu;
    x.insert(x.end(), mu_hat.begin(), mu_hat.end());
    return inequality_system().is_member(x);
}

const std::vector<RayVector>& ConeEngine::all_extremal_rays()
{
    if (rays_)
        return *rays_;
    std::vector<RayVector> collected;
    auto add = [&](RayVector r) {
        for (const auto& x : collected)
            if (x.key() == r.key())
                return;
        collected.push_back(std::move(r));
    };
    for (const auto& facet : facets()) {
        for (auto& r : type_one_rays(facet))
            add(std::move(r));
        for (auto& r : type_two_rays(facet))
            add(std::move(r));
    }
    for (auto& r : fundamental_rays())
        add(std::move(r));

    RationalCone system = inequality_system();
    for (const auto& r : collected)
        if (!system.is_extremal_ray(r.full()))
            throw std::runtime_error("ray " + vec_to_string(r.key()) + " (" + r.provenance +
                                     ") failed the polyhedral extremality certificate");

    // The independent oracle must agree exactly.
    std::set<ZVec> ours;
    for (const auto& r : collected)
        ours.insert(r.key());
    std::set<ZVec> oracle;
    for (const auto& r : system.vrep().rays)
        oracle.insert(r);
    if (!system.vrep().lineality.empty())
        throw std::runtime_error("cone has unexpected lineality");
    if (ours != oracle) {
        std::ostringstream os;
        os << "ray lists disagree with the polyhedral oracle (formulas: " << ours.size()
           << ", oracle: " << oracle.size() << ")";
        throw std::runtime_error(os.str());
    }

    std::sort(collected.begin(), collected.end(),
              [](const RayVector& a, const RayVector& b) { return a.key() < b.key(); });
    rays_ = std::move(collected);
    return *rays_;
}

Prop63Result ConeEngine::prop63_check(const FacetDatum& facet) const
{
    LeviPair levi = make_levi_pair(facet.std_emb, facet.delta);
    std::size_t dom = levi.support.size() + levi.support_hat.size();
    QMat columns; // rows of the transposed Ind matrix
    for (std::size_t q = 0; q < levi.support.size(); ++q) {
        QVec nu(levi.support.size(), 0);
        nu[q] = 1;
        RayVector img = induction(facet, levi, Weight{nu},
                                  Weight{QVec(levi.support_hat.size(), 0)});
        columns.push_back(img.full());
    }
    for (std::size_t q = 0; q < levi.support_hat.size(); ++q) {
        QVec nu(levi.support_hat.size(), 0);
        nu[q] = 1;
        RayVector img =
            induction(facet, levi, Weight{QVec(levi.support.size(), 0)}, Weight{nu});
        columns.push_back(img.full());
    }
    Prop63Result out;
    out.kernel_dim = dom - mat_rank(columns);
    out.type_one_count = facet.covers.size();
    out.rank_hat = emb_.datum_hat().rank();
    out.support_hat_size = facet.support_hat.size();
    long lhs = static_cast<long>(out.kernel_dim);
    long rhs = static_cast<long>(out.type_one_count) - static_cast<long>(out.rank_hat) +
               static_cast<long>(out.support_hat_size);
    out.holds = (lhs == rhs);
    return out;
}

} // namespace branchcone
