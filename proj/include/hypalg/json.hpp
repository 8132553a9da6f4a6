#pragma once

/**
 * @file json.hpp
 * @brief JSON encodings of the library types (nlohmann/json).
 *
 * Integer polynomial coefficients are decimal strings so that arbitrary
 * precision survives the round trip. Multiplicities are plain numbers.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "closedforms.hpp"
#include "complex.hpp"
#include "engines.hpp"
#include "exactalg.hpp"
#include "hypergraph.hpp"
#include "oracle.hpp"

namespace hypalg {

using Json = nlohmann::json;

inline Json coefficients_to_json(const Polynomial& p)
{
    Json a = Json::array();
    for (const auto& c : p.coefficients())
        a.push_back(c.get_str());
    return a;
}

inline Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("polynomial coefficients must be a JSON array");
    std::vector<Integer> coeffs;
    for (const auto& c : j) {
        if (!c.is_string())
            throw InvalidInput("polynomial coefficients must be decimal strings");
        Integer v;
        if (v.set_str(c.get<std::string>(), 10) != 0)
            throw InvalidInput("malformed integer coefficient: " + c.get<std::string>());
        coeffs.push_back(v);
    }
    return Polynomial(std::move(coeffs));
}

inline Json to_json(const RationalFunction& f)
{
    return Json{{"num", coefficients_to_json(f.numerator())}, {"den", coefficients_to_json(f.denominator())}};
}

inline RationalFunction rational_function_from_json(const Json& j)
{
    return {polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den"))};
}

inline Json to_json(const SeriesResult& s)
{
    Json j = to_json(s.series);
    j["provenance"] = s.provenance;
    j["notes"] = s.notes;
    return j;
}

inline SeriesResult series_result_from_json(const Json& j)
{
    return {rational_function_from_json(j), j.at("provenance").get<std::string>(),
            j.at("notes").get<std::vector<std::string>>()};
}

inline Json to_json(const Hypergraph& h) { return Json{{"vertices", h.vertex_count()}, {"edges", h.edges()}}; }

inline Hypergraph hypergraph_from_json(const Json& j)
{
    return {j.at("vertices").get<int>(), j.at("edges").get<std::vector<Edge>>()};
}

inline Json to_json(const BettiTable& t)
{
    Json entries = Json::array();
    for (const auto& [key, v] : t.entries())
        entries.push_back(Json{{"i", key.first}, {"j", key.second}, {"value", v}});
    return Json{{"entries", entries}};
}

inline BettiTable betti_table_from_json(const Json& j)
{
    BettiTable t;
    for (const auto& e : j.at("entries"))
        t.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("value").get<std::uint64_t>());
    return t;
}

inline Json to_json(const BigradedCounts& c)
{
    Json counts = Json::array();
    for (const auto& [key, v] : c.counts())
        counts.push_back(Json{{"r", key.first}, {"w", key.second}, {"value", v}});
    return Json{{"counts", counts}};
}

inline BigradedCounts bigraded_counts_from_json(const Json& j)
{
    BigradedCounts c;
    for (const auto& e : j.at("counts")) {
        const int r = e.at("r").get<int>();
        const int w = e.at("w").get<int>();
        const auto v = e.at("value").get<std::uint64_t>();
        if (r == 0 && w == 0) {
            if (v != 1)
                throw InvalidInput("unit class count must be 1");
            continue;
        }
        c.add(r, w, v);
    }
    return c;
}

inline Json to_json(const VerificationReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            Json{{"description", c.description}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    return Json{{"subject", r.subject}, {"checks", checks}, {"verdict", r.verdict() ? "pass" : "fail"}};
}

inline VerificationReport verification_report_from_json(const Json& j)
{
    VerificationReport r{j.at("subject").get<std::string>(), {}};
    for (const auto& c : j.at("checks"))
        r.add(c.at("description").get<std::string>(), c.at("pass").get<bool>(), c.at("expected").get<std::string>(),
              c.at("actual").get<std::string>());
    if ((j.at("verdict").get<std::string>() == "pass") != r.verdict())
        throw InvalidInput("report verdict inconsistent with its checks");
    return r;
}

inline Json ledger_to_json()
{
    Json a = Json::array();
    for (const auto& e : typo_ledger())
        a.push_back(Json{{"id", e.id},
                         {"location", e.location},
                         {"printed", e.printed},
                         {"adopted", e.adopted},
                         {"adjudication", e.adjudication}});
    return Json{{"entries", a}};
}

} // namespace hypalg
