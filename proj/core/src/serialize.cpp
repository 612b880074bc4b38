#include "fusion/serialize.hpp"

#include "fusion/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace fusion {

using json = nlohmann::ordered_json;

namespace {

json weight_json(const Weight& w) { return json(w.coords()); }

Weight weight_from(const json& j) {
    Weight w(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) w[i] = j.at(i).get<Int>();
    return w;
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) r.push_back(m(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

std::string table_to_json(const FusionTable& t, int indent) {
    const std::size_t p = t.p();
    json n = json::array();
    for (std::size_t a = 0; a < p; ++a) {
        json ja = json::array();
        for (std::size_t b = 0; b < p; ++b) {
            json jb = json::array();
            for (std::size_t c = 0; c < p; ++c) jb.push_back(t(a, b, c));
            ja.push_back(std::move(jb));
        }
        n.push_back(std::move(ja));
    }
    json ws = json::array();
    for (const auto& w : t.weights) ws.push_back(weight_json(w));
    json out = {{"schema_version", table_schema_version},
                {"type", t.type.to_string()},
                {"level", t.level},
                {"method", t.method},
                {"weights", std::move(ws)},
                {"N", std::move(n)}};
    return out.dump(indent);
}

FusionTable table_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        if (j.at("schema_version").get<int>() != table_schema_version)
            throw UsageError("unsupported table schema version " + j.at("schema_version").dump());
        FusionTable t;
        t.type = parse_affine_type(j.at("type").get<std::string>());
        t.level = j.at("level").get<int>();
        t.method = j.at("method").get<std::string>();
        for (const auto& w : j.at("weights")) t.weights.push_back(weight_from(w));
        const std::size_t p = t.p();
        const json& n = j.at("N");
        if (n.size() != p) throw UsageError("N has wrong outer dimension");
        t.N.assign(p * p * p, 0);
        for (std::size_t a = 0; a < p; ++a) {
            if (n.at(a).size() != p) throw UsageError("N has wrong middle dimension");
            for (std::size_t b = 0; b < p; ++b) {
                if (n.at(a).at(b).size() != p) throw UsageError("N has wrong inner dimension");
                for (std::size_t c = 0; c < p; ++c) t(a, b, c) = n.at(a).at(b).at(c).get<Int>();
            }
        }
        return t;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed fusion table JSON: ") + e.what());
    }
}

std::string table_to_csv(const FusionTable& t) {
    std::ostringstream os;
    os << "lambda_index,mu_index,nu_index,N\n";
    const std::size_t p = t.p();
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b)
            for (std::size_t c = 0; c < p; ++c)
                if (t(a, b, c) != 0) os << a << ',' << b << ',' << c << ',' << t(a, b, c) << '\n';
    return os.str();
}

std::string element_to_json(const AlgebraElement& f, int indent) {
    json entries = json::array();
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != Complex(0))
            entries.push_back({{"rep", weight_json(f.keys().element(i))}, {"re", f[i].real()}, {"im", f[i].imag()}});
    json out = {{"side", f.side() == AlgebraSide::group ? "group" : "dual"}, {"entries", std::move(entries)}};
    return out.dump(indent);
}

AlgebraElement element_from_json(const ContextPtr& ctx, const std::string& text) {
    try {
        const json j = json::parse(text);
        const std::string side = j.at("side").get<std::string>();
        if (side != "group" && side != "dual") throw UsageError("side must be group or dual");
        AlgebraElement f(ctx, side == "group" ? AlgebraSide::group : AlgebraSide::dual);
        for (const auto& e : j.at("entries"))
            f[f.keys().index_of(weight_from(e.at("rep")))] += Complex(e.at("re").get<double>(), e.at("im").get<double>());
        return f;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed element JSON: ") + e.what());
    }
}

std::string affine_data_to_json(const AffineData& d, int indent) {
    json f = json::array();
    for (std::size_t i = 0; i < d.quad_form.size(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < d.quad_form.size(); ++j) r.push_back(to_string(d.quad_form(i, j)));
        f.push_back(std::move(r));
    }
    json out = {{"type", d.type.to_string()},
                {"rank", d.n},
                {"cartan", matrix_json(d.cartan)},
                {"marks", d.marks},
                {"comarks", d.comarks},
                {"h", d.h},
                {"h_dual", d.h_dual},
                {"quad_form", std::move(f)},
                {"theta", weight_json(d.theta)},
                {"positive_roots", d.positive_roots.size()},
                {"dual_side", d.dual_side() == Side::weight ? "weight" : "coweight"}};
    return out.dump(indent);
}

std::string report_to_json(const VerifyReport& r, int indent) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"criterion", c.criterion},
                          {"pass", c.pass},
                          {"deviation", number(c.deviation)},
                          {"tolerance", c.tolerance},
                          {"detail", c.detail},
                          {"error", c.error}});
    json out = {{"type", r.type},
                {"level", r.level},
                {"g", r.g},
                {"p", r.p},
                {"s_modulus", {{"min", r.s_modulus_min}, {"max", r.s_modulus_max}}},
                {"s_global_phase", {{"re", r.s_global_phase.real()}, {"im", r.s_global_phase.imag()}}},
                {"passed", r.passed()},
                {"checks", std::move(checks)}};
    return out.dump(indent);
}

}  // namespace fusion
