#include "branchcone/branching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace branchcone {

GroupContext GroupContext::make(RootDatum d, std::size_t weyl_cap)
{
    GroupContext ctx;
    ctx.datum = std::make_shared<const RootDatum>(std::move(d));
    ctx.weyl = std::make_shared<WeylGroup>(*ctx.datum, weyl_cap);
    ctx.ring = std::make_shared<SchubertRing>(*ctx.weyl);
    return ctx;
}

Embedding::Embedding(GroupContext g, GroupContext g_hat, QMat coroot_map, std::string label)
    : g_(std::move(g)), g_hat_(std::move(g_hat)), coroot_map_(std::move(coroot_map)),
      label_(std::move(label))
{
    std::size_t r = g_.datum->rank(), rh = g_hat_.datum->rank();
    if (coroot_map_.size() != rh)
        throw InvalidInput("coroot map must have rank(Ghat) rows");
    for (const auto& row : coroot_map_) {
        if (row.size() != r)
            throw InvalidInput("coroot map must have rank(G) columns");
        for (const auto& x : row)
            if (x.get_den() != 1)
                throw InvalidInput("coroot map entries must be integers");
    }
    restriction_ = mat_transpose(coroot_map_);
    if (r > 0 && rh == 0)
        throw InvalidInput("cannot embed a positive-rank group into a rank-0 group");
    validate();
}

Weight Embedding::restrict_weight(const Weight& lambda_hat) const
{
    if (lambda_hat.coords.size() != g_hat_.datum->rank())
        throw InvalidInput("restrict_weight: dimension mismatch");
    return Weight{g_.datum->rank() ? mat_vec(restriction_, lambda_hat.coords)
                                   : QVec{}};
}

Coweight Embedding::map_coweight(const Coweight& delta) const
{
    QVec c = g_.datum->coroot_coords(delta);
    QVec ch = g_hat_.datum->rank() ? mat_vec(coroot_map_, c) : QVec{};
    return g_hat_.datum->coweight_from_coroot_coords(ch);
}

void Embedding::validate() const
{
    // b inside bhat: every positive root of g must be covered by restrictions
    // of positive roots of ghat, with multiplicity.
    std::map<QVec, long> mult;
    for (const auto& root_hat : g_hat_.datum->positive_roots())
        mult[restrict_weight(root_hat).coords] += 1;
    for (const auto& root : g_.datum->positive_roots()) {
        auto it = mult.find(root.coords);
        if (it == mult.end() || it->second == 0)
            throw InvalidInput("invalid embedding: positive root " +
                               vec_to_string(root.coords) +
                               " of G is not a restriction of a positive root of Ghat");
        it->second -= 1;
    }
    quotient_weights(); // throws on negative multiplicity
}

std::vector<std::pair<Weight, long>> Embedding::quotient_weights() const
{
    std::map<QVec, long> mult;
    for (const auto& root_hat : g_hat_.datum->positive_roots()) {
        Weight rest = restrict_weight(root_hat);
        mult[rest.coords] += 1;
        QVec neg = rest.coords;
        for (auto& x : neg)
            x = -x;
        mult[neg] += 1;
    }
    mult[QVec(g_.datum->rank(), 0)] += static_cast<long>(g_hat_.datum->rank());
    for (const auto& root : g_.datum->positive_roots()) {
        mult[root.coords] -= 1;
        QVec neg = root.coords;
        for (auto& x : neg)
            x = -x;
        mult[neg] -= 1;
    }
    mult[QVec(g_.datum->rank(), 0)] -= static_cast<long>(g_.datum->rank());
    std::vector<std::pair<Weight, long>> out;
    for (const auto& [coords, m] : mult) {
        if (m < 0)
            throw InvalidInput("invalid embedding: negative multiplicity in ghat/g weights");
        if (m > 0)
            out.emplace_back(Weight{coords}, m);
    }
    return out;
}

Embedding::Case Embedding::case_classify() const
{
    QMat rows;
    for (const auto& [w, m] : quotient_weights())
        rows.push_back(w.coords);
    return mat_rank(std::move(rows)) == g_.datum->rank() ? Case::B : Case::A;
}

bool Embedding::weights_coincide() const
{
    std::set<QVec> quotient, full;
    for (const auto& [w, m] : quotient_weights())
        quotient.insert(w.coords);
    for (const auto& root_hat : g_hat_.datum->positive_roots()) {
        Weight rest = restrict_weight(root_hat);
        full.insert(rest.coords);
        QVec neg = rest.coords;
        for (auto& x : neg)
            x = -x;
        full.insert(neg);
    }
    full.insert(QVec(g_.datum->rank(), 0));
    return quotient == full;
}

namespace {

// Deterministic order on coweights via coroot coordinates.
bool coweight_less(const RootDatum& d, const Coweight& a, const Coweight& b)
{
    return d.coroot_coords(a) < d.coroot_coords(b);
}

void insert_unique(std::vector<Coweight>& list, const Coweight& c)
{
    for (const auto& x : list)
        if (x.coords == c.coords)
            return;
    list.push_back(c);
}

} // namespace

std::vector<Coweight> Embedding::special_ops() const
{
    if (case_classify() == Case::A)
        return compatible_ops();
    const RootDatum& d = *g_.datum;
    std::size_t r = d.rank();
    std::vector<Coweight> out;
    if (r == 0)
        return out;

    // Distinct directions of the nonzero weights of ghat/g.
    std::vector<QVec> dirs;
    {
        std::set<ZVec> seen;
        for (const auto& [w, m] : quotient_weights()) {
            ZVec p = primitive_vector(w.coords);
            bool zero = true;
            for (const auto& x : p)
                if (x != 0)
                    zero = false;
            if (zero)
                continue;
            for (const auto& x : p) {
                if (x != 0) {
                    if (x < 0)
                        for (auto& y : p)
                            y = -y;
                    break;
                }
            }
            if (seen.insert(p).second)
                dirs.push_back(to_qvec(p));
        }
    }

    // Hyperplanes spanned by (r-1)-subsets of directions; keep dominant
    // indivisible normals.
    std::vector<std::size_t> comb;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t need) {
        if (need == 0) {
            QMat pairing_rows; // rows l^T A^{-1}, so the nullspace is the normal space
            for (std::size_t k : comb) {
                QVec row = mat_vec(mat_transpose(d.cartan_inverse()), dirs[k]);
                pairing_rows.push_back(row);
            }
            if (mat_rank(pairing_rows) != r - 1)
                return;
            QMat null = pairing_rows.empty() ? identity_matrix(r) : mat_nullspace(pairing_rows);
            if (null.size() != 1)
                return;
            Coweight delta{null[0]};
            if (!d.is_dominant_coweight(delta)) {
                QVec neg = null[0];
                for (auto& x : neg)
                    x = -x;
                delta = Coweight{neg};
                if (!d.is_dominant_coweight(delta))
                    return;
            }
            insert_unique(out, d.indivisible(delta));
            return;
        }
        for (std::size_t k = start; k < dirs.size() && dirs.size() - k >= need; ++k) {
            comb.push_back(k);
            rec(k + 1, need - 1);
            comb.pop_back();
        }
    };
    if (r == 1) {
        // The trivial hyperplane {0}: every dominant indivisible OPS qualifies.
        Coweight delta = d.indivisible(d.fundamental_coweight(0));
        insert_unique(out, delta);
    } else {
        rec(0, r - 1);
    }
    std::sort(out.begin(), out.end(), [&](const Coweight& a, const Coweight& b) {
        return coweight_less(d, a, b);
    });
    return out;
}

std::vector<Coweight> Embedding::compatible_ops() const
{
    const RootDatum& d = *g_.datum;
    const RootDatum& dh = *g_hat_.datum;
    std::size_t r = d.rank(), rh = dh.rank();
    std::vector<Coweight> out;
    if (r == 0)
        return out;

    // x-coordinate matrix of the composite coweight map h -> hhat.
    QMat cx = mat_mul(dh.cartan(), mat_mul(coroot_map_, d.cartan_inverse()));

    for (const auto& v : g_hat_.weyl->elements()) {
        WeylElement vinv = g_hat_.weyl->inverse(v);
        // x-coordinate action matrix of vinv on coweights of ghat.
        QMat n(rh, QVec(rh, 0));
        for (std::size_t j = 0; j < rh; ++j) {
            Coweight img = g_hat_.weyl->act(vinv, dh.fundamental_coweight(j));
            for (std::size_t i = 0; i < rh; ++i)
                n[i][j] = img.coords[i];
        }
        QMat comp = mat_mul(n, cx);
        std::vector<ZVec> rows;
        for (std::size_t i = 0; i < r; ++i) {
            QVec e(r, 0);
            e[i] = 1;
            rows.push_back(primitive_vector(e));
        }
        for (std::size_t i = 0; i < rh; ++i)
            rows.push_back(primitive_vector(comp[i]));
        VRep v_rep = dd_convert(rows, r);
        for (const auto& ray : v_rep.rays) {
            Coweight delta{to_qvec(ray)};
            insert_unique(out, d.indivisible(delta));
        }
    }
    std::sort(out.begin(), out.end(), [&](const Coweight& a, const Coweight& b) {
        return coweight_less(d, a, b);
    });
    return out;
}

std::pair<Embedding, WeylElement> Embedding::standardize(const Coweight& delta) const
{
    Coweight image = map_coweight(delta);
    auto [vhat, dom] = g_hat_.weyl->dominant_conjugator(image);
    const RootDatum& dh = *g_hat_.datum;
    std::size_t rh = dh.rank();
    // Action of vhat on coroot coordinates.
    QMat k(rh, QVec(rh, 0));
    for (std::size_t j = 0; j < rh; ++j) {
        QVec col(rh, 0);
        col[j] = 1;
        Coweight img = g_hat_.weyl->act(vhat, dh.coweight_from_coroot_coords(col));
        QVec cc = dh.coroot_coords(img);
        for (std::size_t i = 0; i < rh; ++i)
            k[i][j] = cc[i];
    }
    QMat new_map = mat_mul(k, coroot_map_);
    std::string new_label = label_;
    if (!vhat.is_identity())
        new_label += " [vhat=" + word_to_string(vhat.word, true) + "]";
    return {Embedding(g_, g_hat_, new_map, new_label), vhat};
}

Weight LeviPair::lift_weight_g(const Weight& nu) const
{
    if (nu.coords.size() != support.size())
        throw InvalidInput("lift_weight_g: dimension mismatch");
    std::size_t r = lift_g.size();
    QVec out(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t q = 0; q < support.size(); ++q)
            out[i] += lift_g[i][q] * nu.coords[q];
    return Weight{out};
}

Weight LeviPair::lift_weight_ghat(const Weight& nu_hat) const
{
    if (nu_hat.coords.size() != support_hat.size())
        throw InvalidInput("lift_weight_ghat: dimension mismatch");
    std::size_t r = lift_ghat.size();
    QVec out(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t q = 0; q < support_hat.size(); ++q)
            out[i] += lift_ghat[i][q] * nu_hat.coords[q];
    return Weight{out};
}

Weight LeviPair::restrict_to_levi_g(const Weight& lambda) const
{
    QVec out;
    for (std::size_t i : support)
        out.push_back(lambda.coords[i]);
    return Weight{out};
}

Weight LeviPair::restrict_to_levi_ghat(const Weight& lambda_hat) const
{
    QVec out;
    for (std::size_t i : support_hat)
        out.push_back(lambda_hat.coords[i]);
    return Weight{out};
}

namespace {

// Lift matrix: columns are the weights of h* restricting to the fundamental
// weights of the Levi semisimple part and vanishing on the center.
QMat levi_lift_matrix(const RootDatum& d, const ParabolicSupport& support)
{
    std::size_t r = d.rank();
    std::vector<std::size_t> sup(support.begin(), support.end());
    if (sup.empty())
        return QMat(r, QVec(0));
    QMat system(r, QVec(r, 0));
    std::size_t row = 0;
    for (std::size_t i : sup) {
        system[row][i] = 1; // <lambda, alpha_i^vee> = nu_i
        ++row;
    }
    QMat a_inv_t = mat_transpose(d.cartan_inverse());
    for (std::size_t k = 0; k < r; ++k) {
        if (support.count(k))
            continue;
        system[row] = a_inv_t[k]; // lambda(x_k) = 0
        ++row;
    }
    QMat inv = mat_inverse(system);
    QMat lift(r, QVec(sup.size(), 0));
    for (std::size_t q = 0; q < sup.size(); ++q)
        for (std::size_t i = 0; i < r; ++i)
            lift[i][q] = inv[i][q]; // rhs has a single 1 in equation row q
    return lift;
}

RootDatum sub_datum(const RootDatum& d, const ParabolicSupport& support, const std::string& label)
{
    std::vector<std::size_t> sup(support.begin(), support.end());
    std::vector<std::vector<long>> cartan(sup.size(), std::vector<long>(sup.size()));
    for (std::size_t a = 0; a < sup.size(); ++a)
        for (std::size_t b = 0; b < sup.size(); ++b)
            cartan[a][b] = static_cast<long>(d.cartan()[sup[a]][sup[b]].get_num().get_si());
    return RootDatum(cartan, label);
}

} // namespace

LeviPair make_levi_pair(const Embedding& std_emb, const Coweight& delta)
{
    const RootDatum& d = std_emb.datum();
    const RootDatum& dh = std_emb.datum_hat();
    if (!d.is_dominant_coweight(delta))
        throw InvalidInput("make_levi_pair: delta must be dominant");
    Coweight image = std_emb.map_coweight(delta);
    if (!dh.is_dominant_coweight(image))
        throw InvalidInput("make_levi_pair: embedding is not standardized for delta");

    ParabolicSupport sup = std_emb.g().weyl->stabilizer_support(delta);
    ParabolicSupport sup_hat = std_emb.g_hat().weyl->stabilizer_support(image);
    std::vector<std::size_t> s(sup.begin(), sup.end());
    std::vector<std::size_t> sh(sup_hat.begin(), sup_hat.end());

    // iota maps the span of the Levi coroots into the span of the hat Levi
    // coroots; the inner coroot map is the corresponding submatrix.
    QMat inner_map(sh.size(), QVec(s.size(), 0));
    for (std::size_t col = 0; col < s.size(); ++col) {
        for (std::size_t k = 0; k < dh.rank(); ++k) {
            if (std_emb.coroot_map()[k][s[col]] == 0)
                continue;
            auto it = std::find(sh.begin(), sh.end(), k);
            if (it == sh.end())
                throw InvalidInput("make_levi_pair: Levi coroot image leaves the hat Levi");
            inner_map[static_cast<std::size_t>(it - sh.begin())][col] =
                std_emb.coroot_map()[k][s[col]];
        }
    }

    GroupContext inner_g = GroupContext::make(sub_datum(d, sup, "levi(" + d.label() + ")"));
    GroupContext inner_gh = GroupContext::make(sub_datum(dh, sup_hat, "levi(" + dh.label() + ")"));
    Embedding inner(inner_g, inner_gh, inner_map,
                    "levi of " + std_emb.label());

    LeviPair out{std::move(inner), sup, sup_hat, levi_lift_matrix(d, sup),
                 levi_lift_matrix(dh, sup_hat)};
    return out;
}

namespace {

std::string product_type(const std::string& type, std::size_t copies)
{
    std::string out = type;
    for (std::size_t i = 1; i < copies; ++i)
        out += "x" + type;
    return out;
}

} // namespace

Embedding build_diagonal(const std::string& type, std::size_t copies, std::size_t weyl_cap)
{
    if (copies < 2)
        throw InvalidInput("diagonal embedding needs at least 2 copies");
    GroupContext g = GroupContext::make(RootDatum::from_type(type), weyl_cap);
    GroupContext gh = GroupContext::make(RootDatum::from_type(product_type(type, copies)), weyl_cap);
    std::size_t r = g.datum->rank();
    QMat m(r * copies, QVec(r, 0));
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < r; ++i)
            m[c * r + i][i] = 1;
    return Embedding(g, gh, m, "diagonal(" + type + "," + std::to_string(copies) + ")");
}

Embedding build_factor(const std::string& g_type, std::size_t copies, std::size_t slot_1based,
                       std::size_t weyl_cap)
{
    if (slot_1based == 0 || slot_1based > copies)
        throw InvalidInput("factor slot out of range");
    GroupContext g = GroupContext::make(RootDatum::from_type(g_type), weyl_cap);
    GroupContext gh =
        GroupContext::make(RootDatum::from_type(product_type(g_type, copies)), weyl_cap);
    std::size_t r = g.datum->rank();
    QMat m(r * copies, QVec(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        m[(slot_1based - 1) * r + i][i] = 1;
    return Embedding(g, gh, m,
                     "factor(" + g_type + "," + std::to_string(copies) + "," +
                         std::to_string(slot_1based) + ")");
}

Embedding build_root_sl2(const std::string& ghat_type, std::size_t simple_index_1based,
                         std::size_t weyl_cap)
{
    GroupContext g = GroupContext::make(RootDatum::from_type("A1"), weyl_cap);
    GroupContext gh = GroupContext::make(RootDatum::from_type(ghat_type), weyl_cap);
    if (simple_index_1based == 0 || simple_index_1based > gh.datum->rank())
        throw InvalidInput("root_sl2: simple index out of range");
    QMat m(gh.datum->rank(), QVec(1, 0));
    m[simple_index_1based - 1][0] = 1;
    return Embedding(g, gh, m,
                     "root_sl2(" + ghat_type + "," + std::to_string(simple_index_1based) + ")");
}

Embedding build_dynkin_sl2(const std::string& ghat_type, const std::vector<long>& labels,
                           std::size_t weyl_cap)
{
    GroupContext g = GroupContext::make(RootDatum::from_type("A1"), weyl_cap);
    GroupContext gh = GroupContext::make(RootDatum::from_type(ghat_type), weyl_cap);
    if (labels.size() != gh.datum->rank())
        throw InvalidInput("dynkin_sl2: need one label per simple root");
    bool nonzero = false;
    QVec xcoords;
    for (long v : labels) {
        if (v < 0 || v > 2)
            throw InvalidInput("dynkin_sl2: labels must be 0, 1 or 2");
        if (v != 0)
            nonzero = true;
        xcoords.push_back(Rat(v));
    }
    if (!nonzero)
        throw InvalidInput("dynkin_sl2: labels cannot all vanish");
    QVec coroot = mat_vec(gh.datum->cartan_inverse(), xcoords);
    if (!all_integral(coroot))
        throw InvalidInput("dynkin_sl2: labels do not define a one-parameter subgroup");
    QMat m(gh.datum->rank(), QVec(1, 0));
    for (std::size_t i = 0; i < gh.datum->rank(); ++i)
        m[i][0] = coroot[i];
    return Embedding(g, gh, m, "dynkin_sl2(" + ghat_type + ")");
}

Embedding build_principal_sl2(const std::string& ghat_type, std::size_t weyl_cap)
{
    GroupContext gh = GroupContext::make(RootDatum::from_type(ghat_type), weyl_cap);
    std::vector<long> labels(gh.datum->rank(), 2);
    auto e = build_dynkin_sl2(ghat_type, labels, weyl_cap);
    return Embedding(e.g(), e.g_hat(), e.coroot_map(), "principal_sl2(" + ghat_type + ")");
}

Embedding build_sp_in_sl(std::size_t n, std::size_t weyl_cap)
{
    if (n < 2)
        throw InvalidInput("sp_in_sl needs n >= 2");
    GroupContext g = GroupContext::make(RootDatum::from_type("C" + std::to_string(n)), weyl_cap);
    GroupContext gh =
        GroupContext::make(RootDatum::from_type("A" + std::to_string(2 * n - 1)), weyl_cap);
    QMat m(2 * n - 1, QVec(n, 0));
    for (std::size_t j = 1; j < n; ++j) {
        m[j - 1][j - 1] = 1;
        m[2 * n - j - 1][j - 1] = 1;
    }
    m[n - 1][n - 1] = 1;
    return Embedding(g, gh, m, "sp_in_sl(" + std::to_string(n) + ")");
}

Embedding build_explicit(const std::string& g_type, const std::string& ghat_type,
                         const std::vector<std::vector<long>>& coroot_map, std::size_t weyl_cap)
{
    GroupContext g = GroupContext::make(RootDatum::from_type(g_type), weyl_cap);
    GroupContext gh = GroupContext::make(RootDatum::from_type(ghat_type), weyl_cap);
    QMat m(coroot_map.size());
    for (std::size_t i = 0; i < coroot_map.size(); ++i) {
        for (long v : coroot_map[i])
            m[i].push_back(Rat(v));
    }
    return Embedding(g, gh, m, g_type + "->" + ghat_type);
}

} // namespace branchcone
