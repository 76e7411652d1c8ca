#include "qmass/report_io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace qmass {

namespace {

using Json = nlohmann::ordered_json;

bool all_equal_at(const IdentityReport& rep, std::size_t n) {
    for (std::size_t r = 1; r < rep.routes.size(); ++r)
        if (rep.routes[r].coeffs[n] != rep.routes[0].coeffs[n]) return false;
    return true;
}

Json coeff_array(const std::vector<Rational>& coeffs) {
    Json arr = Json::array();
    for (const Rational& c : coeffs) arr.push_back(rational_string(c));
    return arr;
}

std::vector<Rational> coeffs_from(const Json& arr) {
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        Rational q(v.get<std::string>());
        q.canonicalize();
        out.push_back(std::move(q));
    }
    return out;
}

Json params_object(const std::vector<std::pair<std::string, long>>& params) {
    Json obj = Json::object();
    for (const auto& [key, value] : params) obj[key] = value;
    return obj;
}

std::string scientific(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", q.get_d());
    return buf;
}

}  // namespace

std::string to_tsv(const IdentityReport& rep) {
    std::string out = "n\tlhs\trhs\tequal\n";
    for (std::size_t n = 0; n < rep.routes[0].coeffs.size(); ++n) {
        out += std::to_string(n);
        out += '\t';
        out += rational_string(rep.routes[0].coeffs[n]);
        out += '\t';
        out += rational_string(rep.routes[1].coeffs[n]);
        out += '\t';
        out += all_equal_at(rep, n) ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string to_tsv(const HallNumericReport& rep) {
    std::string out = "field\tvalue\n";
    out += "p\t" + std::to_string(rep.p) + '\n';
    out += "n_max\t" + std::to_string(rep.n_max) + '\n';
    out += "mass_budget\t" + std::to_string(rep.mass_budget) + '\n';
    out += "A\t" + rational_string(rep.mass_total) + '\n';
    out += "B\t" + rational_string(rep.partition_total) + '\n';
    out += "gap\t" + rational_string(rep.gap) + '\n';
    out += "gap_decimal\t" + scientific(rep.gap) + '\n';
    out += std::string("monotone\t") + (rep.monotone ? "true" : "false") + '\n';
    return out;
}

std::string to_tsv(const DigitsReport& rep) {
    std::string out = "field\tvalue\n";
    out += "value\t" + rep.value + '\n';
    out += "truncation_n\t" + std::to_string(rep.truncation_n) + '\n';
    out += "tail_bound\t" + rational_string(rep.tail_bound) + '\n';
    return out;
}

std::string to_json_string(const IdentityReport& rep) {
    Json j;
    j["identity"] = rep.identity;
    j["params"] = params_object(rep.params);
    Json labels = Json::array();
    for (const SeriesRoute& r : rep.routes) labels.push_back(r.label);
    j["route_labels"] = labels;
    j["lhs_coeffs"] = coeff_array(rep.routes[0].coeffs);
    j["rhs_coeffs"] = coeff_array(rep.routes[1].coeffs);
    if (rep.routes.size() > 2) j["aux_coeffs"] = coeff_array(rep.routes[2].coeffs);
    if (rep.first_mismatch) {
        j["first_mismatch"] = rep.first_mismatch->index;
        j["mismatch_pair"] = Json::array({rep.routes[rep.first_mismatch->route_a].label,
                                          rep.routes[rep.first_mismatch->route_b].label});
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["elapsed_us"] = rep.elapsed.count();
    return j.dump();
}

std::string to_json_string(const HallNumericReport& rep) {
    Json j;
    j["identity"] = "hall-num";
    j["params"] = Json::object();
    j["params"]["p"] = rep.p;
    j["params"]["n_max"] = rep.n_max;
    j["params"]["mass_budget"] = rep.mass_budget;
    j["mass_total"] = rational_string(rep.mass_total);
    j["partition_total"] = rational_string(rep.partition_total);
    j["gap"] = rational_string(rep.gap);
    j["gap_decimal"] = scientific(rep.gap);
    j["monotone"] = rep.monotone;
    Json probes = Json::array();
    for (const auto& [budget, value] : rep.probes)
        probes.push_back(Json::array({budget, rational_string(value)}));
    j["probes"] = probes;
    j["elapsed_us"] = rep.elapsed.count();
    return j.dump();
}

std::string to_json_string(const DigitsReport& rep) {
    Json j;
    j["identity"] = "digits";
    j["params"] = Json::object();
    j["params"]["p"] = rep.base;
    j["params"]["digits"] = rep.digits;
    j["value"] = rep.value;
    j["truncation_n"] = rep.truncation_n;
    j["tail_bound"] = rational_string(rep.tail_bound);
    j["elapsed_us"] = rep.elapsed.count();
    return j.dump();
}

IdentityReport identity_report_from_json(const std::string& text) {
    const Json j = Json::parse(text);
    IdentityReport rep;
    rep.identity = j.at("identity").get<std::string>();
    for (const auto& [key, value] : j.at("params").items())
        rep.params.emplace_back(key, value.get<long>());

    std::vector<std::string> labels;
    for (const auto& l : j.at("route_labels")) labels.push_back(l.get<std::string>());
    if (labels.size() < 2) throw std::invalid_argument("report needs at least two routes");
    rep.routes.push_back({labels[0], coeffs_from(j.at("lhs_coeffs"))});
    rep.routes.push_back({labels[1], coeffs_from(j.at("rhs_coeffs"))});
    if (labels.size() > 2) rep.routes.push_back({labels[2], coeffs_from(j.at("aux_coeffs"))});

    if (!j.at("first_mismatch").is_null()) {
        MismatchInfo mm;
        mm.index = j.at("first_mismatch").get<std::size_t>();
        const auto pair = j.at("mismatch_pair");
        auto find_route = [&](const std::string& label) -> std::size_t {
            for (std::size_t r = 0; r < rep.routes.size(); ++r)
                if (rep.routes[r].label == label) return r;
            throw std::invalid_argument("mismatch_pair names an unknown route");
        };
        mm.route_a = find_route(pair.at(0).get<std::string>());
        mm.route_b = find_route(pair.at(1).get<std::string>());
        rep.first_mismatch = mm;
    }
    rep.elapsed = std::chrono::microseconds(j.at("elapsed_us").get<long long>());
    return rep;
}

}  // namespace qmass
