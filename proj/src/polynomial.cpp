#include "branchcone/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace branchcone {

Polynomial Polynomial::constant(std::size_t nvars, const Rat& c)
{
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::linear(const QVec& coeffs)
{
    Polynomial p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

Rat Polynomial::constant_term() const
{
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

long Polynomial::degree() const
{
    long d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<long>(std::accumulate(e.begin(), e.end(), 0)));
    return d;
}

bool Polynomial::is_homogeneous() const
{
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = std::accumulate(e.begin(), e.end(), 0);
        if (d == -1)
            d = t;
        else if (d != t)
            return false;
    }
    return true;
}

void Polynomial::add_term(const Exponents& e, const Rat& c)
{
    if (c == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    Polynomial out(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e = e1;
            for (std::size_t i = 0; i < nvars_; ++i)
                e[i] += e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

Polynomial Polynomial::operator*(const Rat& c) const
{
    if (c == 0)
        return Polynomial(nvars_);
    Polynomial out(nvars_);
    for (const auto& [e, k] : terms_)
        out.terms_.emplace(e, k * c);
    return out;
}

Polynomial Polynomial::substitute_var(std::size_t i, const QVec& form) const
{
    Polynomial lin = Polynomial::linear(form);
    // Memoize powers of the substituted form.
    std::vector<Polynomial> powers{Polynomial::constant(nvars_, 1)};
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        int k = e[i];
        while (static_cast<int>(powers.size()) <= k)
            powers.push_back(powers.back() * lin);
        Exponents rest = e;
        rest[i] = 0;
        Polynomial mono(nvars_);
        mono.add_term(rest, c);
        out = out + mono * powers[static_cast<std::size_t>(k)];
    }
    return out;
}

Polynomial Polynomial::substitute_all(const QMat& matrix, std::size_t new_nvars) const
{
    std::vector<Polynomial> forms;
    for (std::size_t j = 0; j < nvars_; ++j) {
        QVec col(new_nvars, 0);
        for (std::size_t i = 0; i < new_nvars; ++i)
            col[i] = matrix[i][j];
        forms.push_back(Polynomial::linear(col));
    }
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j)
        powers[j].push_back(Polynomial::constant(new_nvars, 1));
    Polynomial out(new_nvars);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(new_nvars, c);
        for (std::size_t j = 0; j < nvars_; ++j) {
            int k = e[j];
            if (k == 0)
                continue;
            while (static_cast<int>(powers[j].size()) <= k)
                powers[j].push_back(powers[j].back() * forms[j]);
            term = term * powers[j][static_cast<std::size_t>(k)];
        }
        out = out + term;
    }
    return out;
}

Polynomial Polynomial::divide_by_linear(const QVec& form) const
{
    std::size_t pivot = nvars_;
    for (std::size_t j = 0; j < nvars_; ++j)
        if (form[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot == nvars_)
        throw InvalidInput("divide_by_linear: zero divisor");
    Rat pc = form[pivot];

    Polynomial rem = *this;
    Polynomial quot(nvars_);
    while (!rem.terms_.empty()) {
        // Leading term: maximal pivot exponent, then lex-max exponent vector.
        auto lead = rem.terms_.begin();
        for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it) {
            if (it->first[pivot] != lead->first[pivot]) {
                if (it->first[pivot] > lead->first[pivot])
                    lead = it;
            } else if (it->first > lead->first) {
                lead = it;
            }
        }
        if (lead->first[pivot] == 0)
            throw InvalidInput("divide_by_linear: not divisible");
        Exponents qe = lead->first;
        qe[pivot] -= 1;
        Rat qc = lead->second / pc;
        quot.add_term(qe, qc);
        // rem -= (qc x^qe) * form
        for (std::size_t j = 0; j < nvars_; ++j) {
            if (form[j] == 0)
                continue;
            Exponents e = qe;
            e[j] += 1;
            rem.add_term(e, -qc * form[j]);
        }
    }
    return quot;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            os << "*x" << (i + 1);
            if (e[i] > 1)
                os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

} // namespace branchcone
