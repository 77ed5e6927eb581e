#include "ringforge/json_io.hpp"

#include <stdexcept>

namespace ringforge {

Json big_to_json(const BigInt& v) {
    if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

BigInt big_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string), got " + j.dump());
}

Json to_json(const BinaryForm& form) {
    Json coeffs = Json::array();
    for (const auto& c : form.coeffs()) coeffs.push_back(big_to_json(c));
    return Json{{"degree", form.degree()}, {"coeffs", std::move(coeffs)}};
}

BinaryForm form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw std::invalid_argument("form JSON needs a \"coeffs\" array");
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(big_from_json(c));
    if (j.contains("degree")) {
        const int degree = j.at("degree").get<int>();
        return BinaryForm(degree, std::move(coeffs));
    }
    return BinaryForm::from_coeffs(std::move(coeffs));
}

Json to_json(const UnimodularMatrix& m) {
    return Json{{"p", big_to_json(m.p())},
                {"q", big_to_json(m.q())},
                {"r", big_to_json(m.r())},
                {"s", big_to_json(m.s())}};
}

UnimodularMatrix matrix_from_json(const Json& j) {
    for (const char* key : {"p", "q", "r", "s"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("matrix JSON needs field \"") + key + "\"");
    return {big_from_json(j.at("p")), big_from_json(j.at("q")), big_from_json(j.at("r")),
            big_from_json(j.at("s"))};
}

Json coords_to_json(const std::vector<BigInt>& coords) {
    Json arr = Json::array();
    for (const auto& c : coords) arr.push_back(big_to_json(c));
    return Json{{"coords", std::move(arr)}};
}

std::vector<BigInt> coords_from_json(const Json& j) {
    const Json& arr = j.is_object() ? j.at("coords") : j;
    std::vector<BigInt> out;
    for (const auto& c : arr) out.push_back(big_from_json(c));
    return out;
}

Json to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const StructureConstants& table) {
    Json entries = Json::array();
    for (int i = 1; i < table.rank(); ++i)
        for (int j = i; j < table.rank(); ++j) {
            Json coords = Json::array();
            for (const auto& c : table.product(i, j)) coords.push_back(big_to_json(c.constant_value()));
            entries.push_back(Json{{"i", i}, {"j", j}, {"coords", std::move(coords)}});
        }
    return Json{{"n", table.rank()}, {"table", std::move(entries)}};
}

StructureConstants table_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    if (n < 2) throw std::invalid_argument("table JSON: n must be >= 2");
    std::vector<std::vector<Polynomial>> products(static_cast<std::size_t>(n - 1) * (n - 1));
    std::vector<bool> seen(products.size(), false);
    for (const auto& entry : j.at("table")) {
        const int i = entry.at("i").get<int>();
        const int jj = entry.at("j").get<int>();
        if (i < 1 || jj < 1 || i >= n || jj >= n)
            throw std::invalid_argument("table JSON: index out of range");
        std::vector<Polynomial> coords;
        for (const auto& c : entry.at("coords")) coords.emplace_back(big_from_json(c));
        if (coords.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("table JSON: coordinate vectors must have length n");
        products[static_cast<std::size_t>(i - 1) * (n - 1) + (jj - 1)] = coords;
        seen[static_cast<std::size_t>(i - 1) * (n - 1) + (jj - 1)] = true;
        products[static_cast<std::size_t>(jj - 1) * (n - 1) + (i - 1)] = coords;
        seen[static_cast<std::size_t>(jj - 1) * (n - 1) + (i - 1)] = true;
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("table JSON: missing product entries");
    return StructureConstants(n, std::move(products));
}

Json to_json(const Certificate& cert) {
    Json out{{"n", cert.n},
             {"status", status_string(cert.status)},
             {"lhs_terms", cert.lhs_terms},
             {"rhs_terms", cert.rhs_terms},
             {"digest", cert.digest}};
    if (!cert.verified()) {
        out["fail_entry"] = Json::array({cert.fail_row, cert.fail_col});
        out["difference"] = cert.difference ? cert.difference->str() : "";
    }
    // Timing lives under meta so the certified payload stays byte-stable.
    out["meta"] = Json{{"millis", cert.millis}};
    return out;
}

Json to_json(const IsoReport& report) {
    Json out{{"trials", report.trials}, {"passed", report.passed}, {"ok", report.ok()}};
    if (report.counterexample) {
        Json alpha = Json::array(), beta = Json::array();
        for (const auto& c : report.counterexample->alpha) alpha.push_back(big_to_json(c));
        for (const auto& c : report.counterexample->beta) beta.push_back(big_to_json(c));
        out["counterexample"] =
            Json{{"alpha", std::move(alpha)}, {"beta", std::move(beta)}, {"law", report.counterexample->law}};
    }
    return out;
}

} // namespace ringforge
