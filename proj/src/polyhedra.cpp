#include "branchcone/polyhedra.hpp"

#include <algorithm>

namespace branchcone {

namespace {

Rat dot(const ZVec& a, const QVec& x)
{
    Rat out = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        out += Rat(a[i]) * x[i];
    return out;
}

Int dot_int(const ZVec& a, const ZVec& x)
{
    Int out = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        out += a[i] * x[i];
    return out;
}

ZVec primitive_int(const ZVec& v)
{
    Int g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    ZVec out = v;
    if (g != 0)
        for (auto& x : out)
            x /= g;
    return out;
}

// Canonical basis of a rational subspace: RREF rows scaled primitive with
// positive leading entry.
std::vector<ZVec> canonical_subspace_basis(std::vector<QVec> rows, std::size_t dim)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        Rat p = rows[rank][col];
        for (std::size_t j = 0; j < dim; ++j)
            rows[rank][j] /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0)
                continue;
            Rat f = rows[i][col];
            for (std::size_t j = 0; j < dim; ++j)
                rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    rows.resize(rank);
    std::vector<ZVec> out;
    for (const auto& r : rows) {
        ZVec p = primitive_vector(r);
        for (const auto& x : p)
            if (x != 0) {
                if (x < 0)
                    for (auto& y : p)
                        y = -y;
                break;
            }
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct DDRay {
    ZVec vec;                   // primitive
    std::set<std::size_t> tight; // indices of inserted rows with a.r = 0
};

} // namespace

VRep dd_convert(const std::vector<ZVec>& hrep, std::size_t dim)
{
    // Incremental double description with explicit lineality handling.
    std::vector<QVec> lineality;
    for (std::size_t i = 0; i < dim; ++i) {
        QVec e(dim, 0);
        e[i] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<DDRay> rays;

    for (std::size_t t = 0; t < hrep.size(); ++t) {
        const ZVec& a = hrep[t];
        // Does the row cut the lineality space?
        std::size_t pivot = lineality.size();
        for (std::size_t k = 0; k < lineality.size(); ++k)
            if (dot(a, lineality[k]) != 0) {
                pivot = k;
                break;
            }
        if (pivot != lineality.size()) {
            QVec l0 = lineality[pivot];
            Rat v0 = dot(a, l0);
            if (v0 < 0) {
                for (auto& x : l0)
                    x = -x;
                v0 = -v0;
            }
            std::vector<QVec> new_lin;
            for (std::size_t k = 0; k < lineality.size(); ++k) {
                if (k == pivot)
                    continue;
                Rat v = dot(a, lineality[k]);
                QVec adj = lineality[k];
                if (v != 0)
                    for (std::size_t j = 0; j < dim; ++j)
                        adj[j] -= v / v0 * l0[j];
                new_lin.push_back(std::move(adj));
            }
            lineality = std::move(new_lin);
            // Previous rows vanish on l0, so adjusting rays by multiples of
            // l0 keeps their tight sets; all adjusted rays become tight at t.
            for (auto& r : rays) {
                Rat v = dot(a, to_qvec(r.vec));
                if (v != 0) {
                    QVec adj = to_qvec(r.vec);
                    for (std::size_t j = 0; j < dim; ++j)
                        adj[j] -= v / v0 * l0[j];
                    r.vec = primitive_vector(adj);
                }
                r.tight.insert(t);
            }
            DDRay fresh;
            fresh.vec = primitive_vector(l0);
            for (std::size_t s = 0; s < t; ++s)
                fresh.tight.insert(s);
            rays.push_back(std::move(fresh));
            continue;
        }

        std::vector<DDRay> plus, zero, minus;
        std::vector<Int> value(rays.size());
        for (std::size_t k = 0; k < rays.size(); ++k) {
            Int v = dot_int(a, rays[k].vec);
            value[k] = v;
            if (v > 0)
                plus.push_back(rays[k]);
            else if (v == 0) {
                DDRay r = rays[k];
                r.tight.insert(t);
                zero.push_back(std::move(r));
            } else
                minus.push_back(rays[k]);
        }
        if (minus.empty()) {
            rays = plus;
            for (auto& r : zero)
                rays.push_back(r);
            continue;
        }
        auto adjacent = [&](const DDRay& p, const DDRay& m) {
            std::set<std::size_t> common;
            std::set_intersection(p.tight.begin(), p.tight.end(), m.tight.begin(),
                                  m.tight.end(), std::inserter(common, common.begin()));
            for (const auto& r : rays) {
                if (r.vec == p.vec || r.vec == m.vec)
                    continue;
                bool contains = std::includes(r.tight.begin(), r.tight.end(),
                                              common.begin(), common.end());
                if (contains)
                    return false;
            }
            return true;
        };
        std::vector<DDRay> next = plus;
        for (auto& r : zero)
            next.push_back(r);
        for (const auto& p : plus)
            for (const auto& m : minus) {
                if (!adjacent(p, m))
                    continue;
                Int vp = dot_int(a, p.vec), vm = dot_int(a, m.vec);
                ZVec comb(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    comb[j] = vp * m.vec[j] - vm * p.vec[j];
                DDRay nr;
                nr.vec = primitive_int(comb);
                std::set_intersection(p.tight.begin(), p.tight.end(), m.tight.begin(),
                                      m.tight.end(), std::inserter(nr.tight, nr.tight.begin()));
                nr.tight.insert(t);
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
    }

    VRep out;
    for (const auto& r : rays)
        out.rays.push_back(r.vec);
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    out.lineality = canonical_subspace_basis(lineality, dim);
    return out;
}

const VRep& RationalCone::vrep() const
{
    if (!converted_) {
        vrep_ = dd_convert(hrep_, dim_);
        converted_ = true;
    }
    return vrep_;
}

bool RationalCone::is_member(const QVec& x) const
{
    for (const auto& row : hrep_)
        if (dot(row, x) < 0)
            return false;
    return true;
}

bool RationalCone::on_face(const QVec& x, const ZVec& row) const
{
    return is_member(x) && dot(row, x) == 0;
}

bool RationalCone::is_extremal_ray(const QVec& x) const
{
    if (!is_member(x))
        return false;
    bool nonzero = false;
    for (const auto& v : x)
        if (v != 0)
            nonzero = true;
    if (!nonzero)
        return false;
    QMat tight;
    for (const auto& row : hrep_)
        if (dot(row, x) == 0)
            tight.push_back(to_qvec(row));
    return mat_rank(std::move(tight)) == dim_ - 1;
}

std::size_t RationalCone::cone_dimension() const
{
    const VRep& v = vrep();
    QMat gen;
    for (const auto& r : v.rays)
        gen.push_back(to_qvec(r));
    for (const auto& l : v.lineality) {
        gen.push_back(to_qvec(l));
        QVec neg = to_qvec(l);
        for (auto& x : neg)
            x = -x;
        gen.push_back(std::move(neg));
    }
    return mat_rank(std::move(gen));
}

std::size_t RationalCone::face_dimension(const ZVec& row) const
{
    const VRep& v = vrep();
    QMat gen;
    for (const auto& r : v.rays)
        if (dot_int(row, r) == 0)
            gen.push_back(to_qvec(r));
    for (const auto& l : v.lineality)
        if (dot_int(row, l) == 0)
            gen.push_back(to_qvec(l));
    return mat_rank(std::move(gen));
}

std::vector<std::size_t> RationalCone::redundant_rows(std::size_t protected_count) const
{
    std::vector<std::size_t> dropped;
    std::vector<ZVec> current = hrep_;
    std::vector<std::size_t> index(current.size());
    for (std::size_t i = 0; i < current.size(); ++i)
        index[i] = i;
    VRep target = dd_convert(current, dim_);
    for (std::size_t i = protected_count; i < current.size();) {
        std::vector<ZVec> trial;
        for (std::size_t k = 0; k < current.size(); ++k)
            if (k != i)
                trial.push_back(current[k]);
        if (dd_convert(trial, dim_) == target) {
            dropped.push_back(index[i]);
            current.erase(current.begin() + static_cast<long>(i));
            index.erase(index.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    return dropped;
}

std::vector<ZVec> RationalCone::irredundant_subset(std::size_t protected_count) const
{
    auto dropped = redundant_rows(protected_count);
    std::set<std::size_t> drop(dropped.begin(), dropped.end());
    std::vector<ZVec> out;
    for (std::size_t i = 0; i < hrep_.size(); ++i)
        if (!drop.count(i))
            out.push_back(hrep_[i]);
    return out;
}

RationalCone RationalCone::intersect(const RationalCone& a, const RationalCone& b)
{
    if (a.dim() != b.dim())
        throw InvalidInput("intersect: ambient dimension mismatch");
    std::vector<ZVec> rows = a.hrep();
    rows.insert(rows.end(), b.hrep().begin(), b.hrep().end());
    return RationalCone(a.dim(), std::move(rows));
}

} // namespace branchcone
