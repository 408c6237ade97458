#include "bdcoh/json_io.hpp"

#include "bdcoh/errors.hpp"

namespace bdcoh {

namespace {

long long gen_as_ll(const Int& g) {
    static const Int bound = Int(1) << 62;
    if (g > bound || g < -bound) throw bad_input("generator too large for the JSON schema");
    return static_cast<long long>(g);
}

}  // namespace

Json spec_to_json(const TowerSpec& spec) {
    Json j;
    Json gens = Json::array();
    for (const Int& g : spec.gens()) gens.push_back(gen_as_ll(g));
    j["generators"] = gens;
    j["conj_index"] = spec.conj_index();
    return j;
}

TowerSpec spec_from_json(const Json& j) {
    std::vector<Rational> gens;
    for (const auto& g : j.at("generators")) gens.emplace_back(g.get<long long>());
    return TowerSpec::make(gens, j.value("conj_index", -1));
}

Json elem_to_json(const TowerElem& e) {
    Json j;
    const TowerSpec& spec = e.spec();
    Json gens = Json::array();
    for (const Int& g : spec.gens()) gens.push_back(gen_as_ll(g));
    j["generators"] = gens;
    j["conj_index"] = spec.conj_index();
    Json coeffs = Json::array();
    for (const auto& [mask, c] : e.coeffs()) {
        Json entry;
        Json subset = Json::array();
        for (size_t i = 0; i < spec.size(); ++i)
            if (mask & (1u << i)) subset.push_back(static_cast<int>(i));
        entry["subset"] = subset;
        entry["num"] = num(c).str();
        entry["den"] = den(c).str();
        coeffs.push_back(entry);
    }
    j["coeffs"] = coeffs;
    return j;
}

TowerElem elem_from_json(const Json& j) {
    TowerSpec spec = spec_from_json(j);
    TowerElem e(spec);
    for (const auto& entry : j.at("coeffs")) {
        uint32_t mask = 0;
        for (const auto& i : entry.at("subset")) mask |= 1u << i.get<int>();
        Rational c(Int(entry.at("num").get<std::string>()),
                   Int(entry.at("den").get<std::string>()));
        e.set_coeff(mask, c);
    }
    return e;
}

Json matrix_to_json(const MatK& m) {
    Json j;
    j["n"] = m.n();
    j["spec"] = spec_to_json(m.spec());
    Json rows = Json::array();
    for (int i = 1; i <= m.n(); ++i) {
        Json row = Json::array();
        for (int k = 1; k <= m.n(); ++k) row.push_back(elem_to_json(m.at(i, k)));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

MatK matrix_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    TowerSpec spec = spec_from_json(j.at("spec"));
    MatK m(n, spec);
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n) throw bad_input("matrix rows count");
    for (int i = 1; i <= n; ++i) {
        const auto& row = rows[i - 1];
        if (static_cast<int>(row.size()) != n) throw bad_input("matrix row length");
        for (int k = 1; k <= n; ++k) {
            TowerElem e = elem_from_json(row[k - 1]);
            if (e.spec() != spec) throw spec_mismatch("matrix entry spec");
            m.set(i, k, e);
        }
    }
    return m;
}

Json tensor2_to_json(const Tensor2& t) {
    Json j;
    j["n"] = t.n();
    j["spec"] = spec_to_json(t.spec());
    Json terms = Json::array();
    for (const auto& [k, c] : t.terms()) {
        Json term;
        term["legs"] = Json::array({Json::array({k[0], k[1]}), Json::array({k[2], k[3]})});
        term["coeff"] = elem_to_json(c);
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

Tensor2 tensor2_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    TowerSpec spec;
    if (j.contains("spec"))
        spec = spec_from_json(j.at("spec"));
    else if (!j.at("terms").empty())
        spec = spec_from_json(j.at("terms").front().at("coeff"));
    Tensor2 t(n, spec);
    for (const auto& term : j.at("terms")) {
        const auto& legs = term.at("legs");
        TowerElem c = elem_from_json(term.at("coeff"));
        t.add_term(legs[0][0].get<int>(), legs[0][1].get<int>(), legs[1][0].get<int>(),
                   legs[1][1].get<int>(), c.spec() == spec ? c : c.lifted_to(spec));
    }
    return t;
}

Json tensor3_to_json(const Tensor3& t) {
    Json j;
    j["n"] = t.n();
    j["spec"] = spec_to_json(t.spec());
    Json terms = Json::array();
    for (const auto& [k, c] : t.terms()) {
        Json term;
        term["legs"] = Json::array(
            {Json::array({k[0], k[1]}), Json::array({k[2], k[3]}), Json::array({k[4], k[5]})});
        term["coeff"] = elem_to_json(c);
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

Json triple_to_json(const AdmissibleTriple& t) {
    Json j;
    j["n"] = t.n;
    j["gamma1"] = Json::array();
    for (int i : t.gamma1) j["gamma1"].push_back(i);
    j["gamma2"] = Json::array();
    for (int i : t.gamma2) j["gamma2"].push_back(i);
    Json tau = Json::object();
    for (const auto& [a, b] : t.tau) tau[std::to_string(a)] = b;
    j["tau"] = tau;
    return j;
}

AdmissibleTriple triple_from_json(const Json& j) {
    AdmissibleTriple t;
    t.n = j.at("n").get<int>();
    for (const auto& i : j.at("gamma1")) t.gamma1.insert(i.get<int>());
    for (const auto& i : j.at("gamma2")) t.gamma2.insert(i.get<int>());
    for (const auto& [k, v] : j.at("tau").items()) t.tau[std::stoi(k)] = v.get<int>();
    return t;
}

Json cocycle_to_json(const DiagCocycle& c, const Rational& d) {
    Json j;
    j["X"] = matrix_to_json(c.X);
    j["D"] = matrix_to_json(c.D);
    j["d"] = rational_to_string(d);
    return j;
}

}  // namespace bdcoh
