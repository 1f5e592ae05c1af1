#include "pedestal/json_io.hpp"

#include <charconv>

#include "pedestal/error.hpp"

namespace ped {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        parse_error(std::string(what) + " must be an integer");
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        parse_error(std::string(what) + " is out of range");
    return static_cast<int>(v);
}

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array())
        parse_error(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j)
        out.push_back(as_int(x, what));
    return out;
}

std::vector<std::vector<int>> int_rows(const Json& j, const char* what) {
    if (!j.is_array())
        parse_error(std::string(what) + " must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j)
        rows.push_back(int_array(r, what));
    return rows;
}

} // namespace

Partition parse_shape(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            parse_error("shape must be comma-separated integers, got '" + std::string(text) + "'");
        parts.push_back(v);
        pos = end + 1;
        if (end == text.size() - 1)
            parse_error("trailing comma in shape");
    }
    return Partition::from_parts(parts);
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        parse_error(e.what());
    }
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition::from_parts(int_array(j, "partition")); }

Json to_json(const StandardTableau& t) { return Json(t.rows()); }

StandardTableau tableau_from_json(const Json& j) { return StandardTableau::from_rows(int_rows(j, "tableau")); }

Json to_json(const Poset& poset) {
    Json covers = Json::array();
    for (auto [a, b] : poset.covers())
        covers.push_back(Json::array({poset.label(a), poset.label(b)}));
    return Json{{"elements", poset.labels()}, {"covers", std::move(covers)}};
}

Poset poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("elements"))
        parse_error("poset must be an object with \"elements\" and \"covers\"");
    const auto& elements = j.at("elements");
    if (!elements.is_array())
        parse_error("\"elements\" must be an array of strings");
    std::vector<std::string> labels;
    for (const auto& e : elements) {
        if (!e.is_string())
            parse_error("element labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers")) {
        const auto& cs = j.at("covers");
        if (!cs.is_array())
            parse_error("\"covers\" must be an array of pairs");
        for (const auto& c : cs) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
                parse_error("each cover must be a pair of labels");
            covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
    }
    return Poset::from_covers(std::move(labels), covers);
}

Json to_json(const LinearExtension& e) {
    if (const auto& shape = e.poset().shape())
        return to_json(tableau_of_extension(*shape, e));
    Json out = Json::array();
    for (int x : e.order())
        out.push_back(e.poset().label(x));
    return out;
}

LinearExtension extension_from_json(const Poset& poset, const Json& j) {
    if (!j.is_array())
        parse_error("linear extension must be a tableau or an array of labels");
    if (!j.empty() && j.front().is_array()) {
        const auto t = tableau_from_json(j);
        const auto& shape = poset.shape();
        if (!shape || *shape != t.shape())
            throw Error(ErrorKind::ShapeMismatch, "tableau shape does not match the poset");
        auto e = extension_of_tableau(t);
        return LinearExtension(poset, e.order());
    }
    std::vector<int> order;
    for (const auto& x : j) {
        if (!x.is_string())
            parse_error("linear extension labels must be strings");
        auto idx = poset.index_of(x.get<std::string>());
        if (!idx)
            throw Error(ErrorKind::UnknownLabel, "unknown element '" + x.get<std::string>() + "'");
        order.push_back(*idx);
    }
    return LinearExtension(poset, std::move(order));
}

Json to_json(const ReversePlanePartition& rpp) {
    if (rpp.poset().shape())
        return Json(rpp.rows());
    Json values = Json::object();
    for (int e = 0; e < rpp.size(); ++e)
        values[rpp.poset().label(e)] = rpp[e];
    return Json{{"values", std::move(values)}};
}

ReversePlanePartition rpp_from_json(const Poset& poset, const Json& j) {
    if (j.is_array()) {
        auto rpp = ReversePlanePartition::from_rows(int_rows(j, "reverse plane partition"));
        const auto& shape = poset.shape();
        if (!shape || *shape != *rpp.poset().shape())
            throw Error(ErrorKind::ShapeMismatch, "row arrays do not match the poset");
        return ReversePlanePartition(poset, rpp.values());
    }
    if (!j.is_object() || !j.contains("values") || !j.at("values").is_object())
        parse_error("reverse plane partition must be row arrays or {\"values\":{...}}");
    const auto& map = j.at("values");
    std::vector<int> values(static_cast<std::size_t>(poset.size()), 0);
    std::vector<bool> seen(values.size(), false);
    for (const auto& [label, v] : map.items()) {
        auto idx = poset.index_of(label);
        if (!idx)
            throw Error(ErrorKind::UnknownLabel, "unknown element '" + label + "'");
        values[*idx] = as_int(v, "value");
        seen[*idx] = true;
    }
    for (std::size_t e = 0; e < seen.size(); ++e)
        if (!seen[e])
            throw Error(ErrorKind::MissingValue, "no value for element '" + poset.label(static_cast<int>(e)) + "'");
    return ReversePlanePartition(poset, std::move(values));
}

Json to_json(const Pedestal& pedestal) {
    Json rpp = to_json(pedestal.rpp);
    Json values = rpp.is_object() ? rpp.at("values") : rpp;
    return Json{{"P", to_json(pedestal.p)}, {"Q", to_json(pedestal.q)}, {"values", std::move(values)}};
}

Json to_json(const Series& s) {
    Json terms = Json::array();
    for (const auto& [m, c] : s.terms())
        terms.push_back(Json{{"indices", m.indices()}, {"coeff", c}});
    Json out{{"n", s.degree()}};
    out["truncation"] = s.truncation() ? Json(*s.truncation()) : Json(nullptr);
    out["terms"] = std::move(terms);
    return out;
}

Series series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        parse_error("series must be an object with \"n\" and \"terms\"");
    std::optional<std::int64_t> trunc;
    if (j.contains("truncation") && !j.at("truncation").is_null()) {
        if (!j.at("truncation").is_number_integer())
            parse_error("\"truncation\" must be an integer or null");
        trunc = j.at("truncation").get<std::int64_t>();
    }
    Series s(as_int(j.at("n"), "n"), trunc);
    if (!j.at("terms").is_array())
        parse_error("\"terms\" must be an array");
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("indices") || !t.contains("coeff") || !t.at("coeff").is_number_integer())
            parse_error("each term needs \"indices\" and an integer \"coeff\"");
        s.add(Monomial(int_array(t.at("indices"), "indices")), t.at("coeff").get<std::int64_t>());
    }
    return s;
}

Json to_json(const UniPoly& p) { return Json{{"coeffs", p.coeffs()}}; }

UniPoly unipoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        parse_error("polynomial must be {\"coeffs\":[...]}");
    std::vector<std::int64_t> c;
    for (const auto& x : j.at("coeffs")) {
        if (!x.is_number_integer())
            parse_error("coefficients must be integers");
        c.push_back(x.get<std::int64_t>());
    }
    return UniPoly(std::move(c));
}

Json to_json(const IndependenceReport& r) {
    Json out{{"independent", r.independent}, {"extensions", r.extensions}};
    out["mismatch_index"] = r.mismatch_index ? Json(*r.mismatch_index) : Json(nullptr);
    out["mismatch_monomial"] = r.mismatch_monomial ? Json(r.mismatch_monomial->indices()) : Json(nullptr);
    out["pedestal_set_depends_on_P"] = r.pedestal_set_depends_on_p;
    out["dependence_witness"] = r.dependence_witness
                                    ? Json::array({r.dependence_witness->first, r.dependence_witness->second})
                                    : Json(nullptr);
    return out;
}

Json to_json(const FactorizationReport& r) {
    Json out{{"holds", r.holds}};
    if (r.first_mismatch) {
        out["first_mismatch"] = Json{{"indices", r.first_mismatch->indices()},
                                     {"lhs", r.lhs.coefficient(*r.first_mismatch)},
                                     {"rhs", r.rhs.coefficient(*r.first_mismatch)}};
    } else {
        out["first_mismatch"] = nullptr;
    }
    out["terms"] = r.lhs.terms().size();
    return out;
}

Json to_json(const HookIdentityReport& r) {
    return Json{{"holds", r.holds}, {"pi", to_json(r.pi)}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
}

Json to_json(const MajComajReport& r) {
    return Json{{"holds", r.holds},
                {"maj", to_json(r.maj_sum)},
                {"shifted_pi", to_json(r.shifted_pi)},
                {"comaj", to_json(r.comaj_sum)}};
}

Json to_json(const FamilyReport& r) {
    Json tableaux = Json::array();
    for (const auto& t : r.tableaux)
        tableaux.push_back(to_json(t));
    Json candidates = Json::array();
    for (const auto& c : r.candidates) {
        Json cj{{"name", c.name}, {"values", c.values}, {"member", c.member()}};
        cj["matching_P"] = c.matching_p ? Json(*c.matching_p) : Json(nullptr);
        candidates.push_back(std::move(cj));
    }
    return Json{{"tableaux", std::move(tableaux)}, {"family", r.family}, {"candidates", std::move(candidates)}};
}

Json to_json(const SymmetryWitness& w) {
    return Json{{"swap", Json::array({w.t, w.t + 1})},
                {"monomial", w.monomial.indices()},
                {"coeff", w.coefficient},
                {"swapped", w.swapped.indices()},
                {"swapped_coeff", w.swapped_coefficient}};
}

} // namespace ped
