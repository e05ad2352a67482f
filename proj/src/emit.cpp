#include "branchcone/emit.hpp"

#include "branchcone/rep_oracle.hpp"

#include <json.hpp>

#include <sstream>

namespace branchcone {

namespace {

std::string coeff_string(const ZVec& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? " " : "") << v[i];
    return os.str();
}

std::string coroot_string(const RootDatum& d, const Coweight& c)
{
    return vec_to_string(primitive_vector(d.coroot_coords(c)));
}

nlohmann::json facet_json(const ConeEngine& engine, const FacetDatum& f)
{
    nlohmann::json j;
    j["delta"] = "delta" + std::to_string(f.delta_index + 1);
    j["delta_coroot"] = coroot_string(engine.embedding().datum(), f.delta);
    j["vhat"] = word_to_string(f.v_hat.word, true);
    j["w"] = word_to_string(f.w.word);
    j["what"] = word_to_string(f.w_hat.word, true);
    std::vector<long> coeffs;
    for (const auto& c : f.inequality)
        coeffs.push_back(c.get_si());
    j["coefficients"] = coeffs;
    return j;
}

} // namespace

std::string emit_facets_tsv(ConeEngine& engine)
{
    std::ostringstream os;
    os << "delta\tdelta_coroot\tvhat\tw\twhat\tcoefficients\n";
    for (const auto& f : engine.facets()) {
        os << "delta" << (f.delta_index + 1) << "\t"
           << coroot_string(engine.embedding().datum(), f.delta) << "\t"
           << word_to_string(f.v_hat.word, true) << "\t" << word_to_string(f.w.word) << "\t"
           << word_to_string(f.w_hat.word, true) << "\t" << coeff_string(f.inequality) << "\n";
    }
    return os.str();
}

std::string emit_facets_json(ConeEngine& engine)
{
    nlohmann::json j;
    j["embedding"] = engine.embedding().label();
    j["case"] = engine.embedding().case_classify() == Embedding::Case::B ? "B" : "A";
    j["facets"] = nlohmann::json::array();
    for (const auto& f : engine.facets())
        j["facets"].push_back(facet_json(engine, f));
    return j.dump(2) + "\n";
}

std::string emit_rays_tsv(ConeEngine& engine)
{
    std::ostringstream os;
    os << "provenance\tcoordinates\n";
    for (const auto& r : engine.all_extremal_rays())
        os << r.provenance << "\t" << coeff_string(r.key()) << "\n";
    return os.str();
}

std::string emit_rays_json(ConeEngine& engine)
{
    nlohmann::json j;
    j["embedding"] = engine.embedding().label();
    j["rays"] = nlohmann::json::array();
    for (const auto& r : engine.all_extremal_rays()) {
        nlohmann::json e;
        e["provenance"] = r.provenance;
        std::vector<long> coords;
        for (const auto& c : r.key())
            coords.push_back(c.get_si());
        e["coordinates"] = coords;
        j["rays"].push_back(e);
    }
    return j.dump(2) + "\n";
}

CheckReport run_check(ConeEngine& engine, const std::vector<long>& mu,
                      const std::vector<long>& mu_hat, int nmax, long rep_dim_cap,
                      bool search_witness)
{
    const auto& d = engine.embedding().datum();
    const auto& dh = engine.embedding().datum_hat();
    if (mu.size() != d.rank() || mu_hat.size() != dh.rank())
        throw InvalidInput("check: weight coordinate counts do not match the groups");
    QVec x;
    for (long v : mu)
        x.push_back(Rat(v));
    QVec xh;
    for (long v : mu_hat)
        xh.push_back(Rat(v));

    CheckReport report;
    report.member = true;
    QVec full = x;
    full.insert(full.end(), xh.begin(), xh.end());
    for (const auto& f : engine.facets()) {
        Rat value = 0;
        for (std::size_t i = 0; i < full.size(); ++i)
            value += Rat(f.inequality[i]) * full[i];
        if (value > 0) {
            report.member = false;
            report.violated.push_back(f.provenance());
        }
    }
    for (const auto& v : full)
        if (v < 0)
            report.member = false;

    if (search_witness) {
        report.witness_searched = true;
        report.nmax = nmax;
        report.witness =
            saturation_witness(engine.embedding(), Weight{x}, Weight{xh}, nmax, Int(rep_dim_cap));
    }
    return report;
}

std::string check_to_string(const CheckReport& report, bool json)
{
    if (json) {
        nlohmann::json j;
        j["member"] = report.member;
        j["violated"] = report.violated;
        if (report.witness_searched) {
            j["nmax"] = report.nmax;
            if (report.witness)
                j["witness"] = *report.witness;
            else
                j["witness"] = nullptr;
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "member\t" << (report.member ? "true" : "false") << "\n";
    for (const auto& v : report.violated)
        os << "violated\t" << v << "\n";
    if (report.witness_searched) {
        if (report.witness)
            os << "witness\tN=" << *report.witness << "\n";
        else
            os << "witness\tnone up to N=" << report.nmax << "\n";
    }
    return os.str();
}

VerifyReport run_verify(ConeEngine& engine)
{
    VerifyReport report;
    auto note = [&](bool ok, const std::string& what) {
        report.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        if (!ok)
            report.ok = false;
    };

    // Formula rays against the double-description oracle (hard failure is
    // converted into a reported line here).
    try {
        std::size_t n = engine.all_extremal_rays().size();
        note(true, "oracle equivalence: " + std::to_string(n) + " extremal rays");
    } catch (const std::exception& e) {
        note(false, std::string("oracle equivalence: ") + e.what());
        return report;
    }

    bool case_b = engine.embedding().case_classify() == Embedding::Case::B;

    // Prop 63 counting identity on case-B facets.
    if (case_b) {
        bool all = true;
        for (const auto& f : engine.facets()) {
            auto p = engine.prop63_check(f);
            if (!p.holds)
                all = false;
        }
        note(all, "counting identity c = q - rk(Ghat) + |Delta(Phat)| on all facets");
    }

    // Cover-pairing lemmas: each type I ray pairs to 1 on its own cover
    // coroot and to 0 on the other cover coroots of the same facet.
    {
        bool all = true;
        for (const auto& f : engine.facets()) {
            auto rays = engine.type_one_rays(f);
            for (std::size_t a = 0; a < f.covers.size(); ++a)
                for (std::size_t b = 0; b < f.covers.size(); ++b) {
                    const auto& cov = f.covers[b];
                    Rat v = cov.hat_side ? rays[a].mu_hat[cov.simple_index]
                                         : rays[a].mu[cov.simple_index];
                    if (v != (a == b ? 1 : 0))
                        all = false;
                }
        }
        note(all, "cover pairings: mu(alpha_l^vee) = 1 on own datum, 0 on others");
    }

    // Irredundancy (case B): no facet row may be removable.
    if (case_b) {
        auto system = engine.inequality_system();
        auto dropped = system.redundant_rows(engine.dominance_row_count());
        note(dropped.empty(), "irredundancy: no facet inequality is redundant");
        bool dims = true;
        for (const auto& f : engine.facets()) {
            ZVec flipped = f.inequality;
            for (auto& x : flipped)
                x = -x;
            if (system.face_dimension(flipped) + 1 != engine.dominance_row_count())
                dims = false;
        }
        note(dims, "regular facets: every inequality cuts a codimension-1 face");
    }

    // Deformed pullback: the collapsed numerical test agrees with the
    // two-stage definition on every complementary-degree pair.
    {
        bool all = true;
        for (const auto& delta : engine.facet_ops()) {
            auto [std_emb, vhat] = engine.embedding().standardize(delta);
            Coweight image = std_emb.map_coweight(delta);
            const auto& weyl = *std_emb.g().weyl;
            const auto& weyl_hat = *std_emb.g_hat().weyl;
            ParabolicSupport sup = weyl.stabilizer_support(delta);
            ParabolicSupport sup_hat = weyl_hat.stabilizer_support(image);
            std::size_t dim_hat = weyl_hat.dim_flag_variety(sup_hat);
            WeylElement w0 = weyl.longest_element();
            WeylElement w0p = weyl.longest_element(sup);
            for (const auto& w : weyl.min_coset_reps(sup))
                for (const auto& w_hat : weyl_hat.min_coset_reps(sup_hat)) {
                    if (w.length + w_hat.length != dim_hat)
                        continue;
                    bool collapsed = is_facet_pair(std_emb, w, w_hat, delta);
                    WeylElement dual = weyl.multiply(weyl.multiply(w0, w), w0p);
                    SchubertClass def = deformed_pullback(std_emb, w_hat, delta);
                    bool twostage = (def.coefficient(dual) == 1);
                    if (collapsed != twostage)
                        all = false;
                }
        }
        note(all, "deformed pullback: two-stage test matches the collapsed criterion");
    }

    return report;
}

} // namespace branchcone
