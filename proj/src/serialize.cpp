#include "wschur/serialize.hpp"

namespace wschur {

Json to_json(const Partition& lambda) { return Json(lambda.rows()); }

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::object();
        for (const auto& [v, e] : m.vars()) mono[v.to_string()] = e;
        terms.push_back(Json{{"coeff", c.to_string()}, {"mono", std::move(mono)}});
    }
    return Json{{"terms", std::move(terms)}};
}

Json to_json(const DenomGen& gen) {
    switch (gen.kind()) {
        case DenomGen::Kind::VCh: return Json{{"kind", "vCh"}};
        case DenomGen::Kind::WLambda:
            return Json{{"kind", "wLambda"}, {"partition", to_json(gen.lambda())}};
        case DenomGen::Kind::WPrimeCh: return Json{{"kind", "wprimeCh"}};
    }
    return {};
}

Json to_json(const LocalizedElem& e) {
    Json out = to_json(e.numerator());
    Json denom = Json::array();
    for (const DenomGen& g : e.denominator()) denom.push_back(to_json(g));
    out["denom"] = std::move(denom);
    return out;
}

Json to_json(const ExpansionResult& expansion) {
    Json coefficients = Json::array();
    for (const auto& [nu, value] : expansion.coefficients) {
        coefficients.push_back(Json{{"partition", to_json(nu)},
                                    {"value", to_json(value)},
                                    {"rendered", value.to_string()}});
    }
    return Json{{"basis", basis_name(expansion.basis)},
                {"coefficients", std::move(coefficients)},
                {"residualZero", expansion.residual_zero}};
}

Json to_json(const WeightConfig& cfg) {
    return Json{{"d", cfg.d}, {"n", cfg.n}, {"itw", cfg.itw}, {"u", cfg.u}};
}

Json to_json(const RestrictionTable& table) {
    Json columns = Json::array();
    for (const Partition& mu : table.classes) columns.push_back(mu.to_subset(table.cfg.n));
    Json rows = Json::array();
    for (const Partition& lambda : table.classes) {
        Json cells = Json::array();
        for (const Partition& mu : table.classes)
            cells.push_back(table.entry(lambda, mu).to_string());
        rows.push_back(Json{{"lambda", to_json(lambda)}, {"cells", std::move(cells)}});
    }
    return Json{{"config", to_json(table.cfg)},
                {"columns", std::move(columns)},
                {"rows", std::move(rows)}};
}

std::string table_to_csv(const RestrictionTable& table) {
    std::string out = "# " + table.cfg.to_string() + "\n";
    out += "lambda";
    for (const Partition& mu : table.classes) {
        std::string subset;
        for (int j : mu.to_subset(table.cfg.n)) {
            if (!subset.empty()) subset += " ";
            subset += std::to_string(j);
        }
        out += ",\"{" + subset + "}\"";
    }
    out += "\n";
    for (const Partition& lambda : table.classes) {
        out += "\"" + lambda.to_string() + "\"";
        for (const Partition& mu : table.classes)
            out += ",\"" + table.entry(lambda, mu).to_string() + "\"";
        out += "\n";
    }
    return out;
}

} // namespace wschur
