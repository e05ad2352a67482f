#include "branchcone/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace branchcone {

namespace {

std::vector<std::vector<long>> series_cartan(char series, std::size_t n)
{
    std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j) {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    switch (series) {
    case 'A':
        for (std::size_t i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        break;
    case 'B': // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        if (n < 2)
            throw InvalidInput("series B needs rank >= 2");
        for (std::size_t i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        a[n - 2][n - 1] = -2;
        break;
    case 'C': // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        if (n < 2)
            throw InvalidInput("series C needs rank >= 2");
        for (std::size_t i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        a[n - 1][n - 2] = -2;
        break;
    case 'D':
        if (n < 3)
            throw InvalidInput("series D needs rank >= 3");
        for (std::size_t i = 0; i + 2 < n; ++i)
            link(i, i + 1);
        link(n - 3, n - 1);
        break;
    default:
        throw InvalidInput(std::string("unknown series letter '") + series + "'");
    }
    return a;
}

} // namespace

RootDatum::RootDatum(const std::vector<std::vector<long>>& cartan, std::string label)
    : rank_(cartan.size()), label_(std::move(label))
{
    cartan_.assign(rank_, QVec(rank_, 0));
    for (std::size_t i = 0; i < rank_; ++i) {
        if (cartan[i].size() != rank_)
            throw InvalidInput("Cartan matrix not square");
        for (std::size_t j = 0; j < rank_; ++j) {
            long e = cartan[i][j];
            if (i == j && e != 2)
                throw InvalidInput("Cartan matrix needs 2 on the diagonal");
            if (i != j && e > 0)
                throw InvalidInput("Cartan matrix off-diagonal entries must be <= 0");
            if (i != j && ((e == 0) != (cartan[j][i] == 0)))
                throw InvalidInput("Cartan matrix zero pattern must be symmetric");
            cartan_[i][j] = e;
        }
    }
    finish_construction();
}

void RootDatum::finish_construction()
{
    if (rank_ > 0) {
        cartan_inv_ = mat_inverse(cartan_); // throws on non-Cartan (singular) input
        cartan_inv_t_ = mat_transpose(cartan_inv_);
    }
    rho_ = Weight{QVec(rank_, 1)};

    simple_roots_.clear();
    simple_coroots_.clear();
    for (std::size_t i = 0; i < rank_; ++i) {
        simple_roots_.push_back(Weight{cartan_[i]});
        QVec col(rank_);
        for (std::size_t k = 0; k < rank_; ++k)
            col[k] = cartan_[k][i];
        simple_coroots_.push_back(Coweight{col});
    }

    // Dynkin components.
    components_.clear();
    std::vector<bool> seen(rank_, false);
    for (std::size_t i = 0; i < rank_; ++i) {
        if (seen[i])
            continue;
        std::vector<std::size_t> comp, stack{i};
        seen[i] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::size_t j = 0; j < rank_; ++j)
                if (!seen[j] && cartan_[v][j] != 0) {
                    seen[j] = true;
                    stack.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        components_.push_back(std::move(comp));
    }

    // Symmetrizer d_i with d_i A_ij = d_j A_ji; Gram matrix on the omega
    // basis is A^{-1} D A^{-T} up to the convention (omega_i, omega_j) =
    // sum over root coords. We set (alpha_i, alpha_j) = d_j A_ij.
    QVec d(rank_, 0);
    for (const auto& comp : components_) {
        d[comp[0]] = 1;
        std::vector<std::size_t> stack{comp[0]};
        std::set<std::size_t> done{comp[0]};
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t j : comp) {
                if (done.count(j) || cartan_[v][j] == 0)
                    continue;
                // (alpha_v, alpha_j) symmetric: d_j A_vj = d_v A_jv
                d[j] = d[v] * cartan_[j][v] / cartan_[v][j];
                done.insert(j);
                stack.push_back(j);
            }
        }
    }
    // Normalize each component so min d = 1 (short roots squared length 2).
    for (const auto& comp : components_) {
        Rat mn = d[comp[0]];
        for (std::size_t j : comp)
            mn = std::min(mn, d[j]);
        for (std::size_t j : comp)
            d[j] /= mn;
    }
    if (rank_ > 0) {
        // (alpha_i, alpha_j) = d_j * A_ij (symmetric by construction).
        QMat s(rank_, QVec(rank_, 0));
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j)
                s[i][j] = d[j] * cartan_[i][j];
        // omega_i = sum_j (A^{-1})_ij alpha_j  =>  G = A^{-1} S A^{-T}.
        form_gram_ = mat_mul(mat_mul(cartan_inv_, s), cartan_inv_t_);
    }

    // Positive roots: closure of the simple roots under simple reflections.
    positive_roots_.clear();
    positive_coroots_.clear();
    std::map<QVec, QVec> found; // root coords -> coroot coroot-coords
    std::vector<std::pair<QVec, QVec>> frontier;
    auto is_positive = [&](const QVec& w) {
        QVec c = mat_vec(cartan_inv_t_, w);
        bool nonzero = false;
        for (const auto& x : c) {
            if (x < 0)
                return false;
            if (x != 0)
                nonzero = true;
        }
        return nonzero;
    };
    for (std::size_t i = 0; i < rank_; ++i) {
        QVec root = cartan_[i];
        QVec coroot(rank_, 0);
        coroot[i] = 1; // coroot coords of alpha_i^vee
        if (!found.count(root)) {
            found[root] = coroot;
            frontier.emplace_back(root, coroot);
        }
    }
    while (!frontier.empty()) {
        std::vector<std::pair<QVec, QVec>> next;
        for (const auto& [root, coroot] : frontier) {
            for (std::size_t i = 0; i < rank_; ++i) {
                // s_i(root) = root - root_i * alpha_i  (root_i = <root, alpha_i^vee>)
                QVec r = root;
                Rat ri = root[i];
                for (std::size_t k = 0; k < rank_; ++k)
                    r[k] -= ri * cartan_[i][k];
                // s_i on coroot coords c: c - <alpha_i, sum c_j alpha_j^vee> e_i
                QVec c = coroot;
                Rat pairing = 0;
                for (std::size_t j = 0; j < rank_; ++j)
                    pairing += cartan_[i][j] * coroot[j];
                c[i] -= pairing;
                if (is_positive(r) && !found.count(r)) {
                    found[r] = c;
                    next.emplace_back(r, c);
                }
            }
        }
        frontier = std::move(next);
    }
    for (const auto& [root, coroot] : found) {
        positive_roots_.push_back(Weight{root});
        Coweight cw = coweight_from_coroot_coords(coroot);
        positive_coroots_.push_back(cw);
    }
}

RootDatum RootDatum::from_type(const std::string& type)
{
    if (type == "T0")
        return RootDatum(std::vector<std::vector<long>>{}, "T0");
    // Split on 'x'.
    std::vector<std::pair<char, std::size_t>> parts;
    std::size_t pos = 0;
    while (pos < type.size()) {
        std::size_t next = type.find('x', pos);
        std::string tok = type.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.size() < 2 || tok[0] < 'A' || tok[0] > 'D')
            throw InvalidInput("bad type descriptor '" + type + "'");
        std::size_t n = 0;
        for (std::size_t k = 1; k < tok.size(); ++k) {
            if (!isdigit(static_cast<unsigned char>(tok[k])))
                throw InvalidInput("bad type descriptor '" + type + "'");
            n = n * 10 + static_cast<std::size_t>(tok[k] - '0');
        }
        if (n == 0)
            throw InvalidInput("rank 0 factor in '" + type + "'");
        parts.emplace_back(tok[0], n);
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    if (parts.empty())
        throw InvalidInput("empty type descriptor");
    std::size_t total = 0;
    for (auto& [s, n] : parts)
        total += n;
    std::vector<std::vector<long>> cartan(total, std::vector<long>(total, 0));
    std::size_t off = 0;
    for (auto& [s, n] : parts) {
        auto block = series_cartan(s, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                cartan[off + i][off + j] = block[i][j];
        off += n;
    }
    return RootDatum(cartan, type);
}

Weight RootDatum::fundamental_weight(std::size_t i) const
{
    QVec v(rank_, 0);
    v.at(i) = 1;
    return Weight{v};
}

Coweight RootDatum::fundamental_coweight(std::size_t i) const
{
    QVec v(rank_, 0);
    v.at(i) = 1;
    return Coweight{v};
}

Rat RootDatum::pair(const Weight& lambda, const Coweight& delta) const
{
    if (lambda.coords.size() != rank_ || delta.coords.size() != rank_)
        throw InvalidInput("pair: dimension mismatch");
    QVec ci = rank_ ? mat_vec(cartan_inv_, delta.coords) : QVec{};
    Rat out = 0;
    for (std::size_t i = 0; i < rank_; ++i)
        out += lambda.coords[i] * ci[i];
    return out;
}

bool RootDatum::is_dominant(const Weight& lambda) const
{
    for (const auto& x : lambda.coords)
        if (x < 0)
            return false;
    return true;
}

bool RootDatum::is_dominant_coweight(const Coweight& delta) const
{
    for (const auto& x : delta.coords)
        if (x < 0)
            return false;
    return true;
}

bool RootDatum::is_integral(const Weight& lambda) const
{
    return all_integral(lambda.coords);
}

QVec RootDatum::root_basis_coords(const Weight& lambda) const
{
    return rank_ ? mat_vec(cartan_inv_t_, lambda.coords) : QVec{};
}

QVec RootDatum::coroot_coords(const Coweight& delta) const
{
    return rank_ ? mat_vec(cartan_inv_, delta.coords) : QVec{};
}

Coweight RootDatum::coweight_from_coroot_coords(const QVec& c) const
{
    if (c.size() != rank_)
        throw InvalidInput("coroot coords: dimension mismatch");
    return Coweight{rank_ ? mat_vec(cartan_, c) : QVec{}};
}

bool RootDatum::is_one_param(const Coweight& delta) const
{
    return all_integral(coroot_coords(delta));
}

Coweight RootDatum::indivisible(const Coweight& delta) const
{
    ZVec prim = primitive_vector(coroot_coords(delta));
    return coweight_from_coroot_coords(to_qvec(prim));
}

Rat RootDatum::form(const Weight& a, const Weight& b) const
{
    Rat out = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (a.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < rank_; ++j)
            out += a.coords[i] * form_gram_[i][j] * b.coords[j];
    }
    return out;
}

} // namespace branchcone
