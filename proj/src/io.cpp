#include "leonard/io.hpp"

#include <fstream>

namespace leonard {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("field descriptor must be an object with a 'kind' string");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational")
        return FieldSpec::rational();
    if (kind == "prime") {
        if (!j.contains("p") || !j.at("p").is_number_unsigned())
            throw ParseError("prime field descriptor needs a positive integer 'p'");
        return FieldSpec::prime(j.at("p").get<unsigned long>());
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

ordered_json field_to_json(const FieldSpec& f) {
    ordered_json j;
    if (f.is_prime_field()) {
        j["kind"] = "prime";
        j["p"] = f.p();
    } else {
        j["kind"] = "rational";
    }
    return j;
}

std::vector<Scalar> scalars_from_json(const json& j, const FieldSpec& f, const std::string& key) {
    if (!j.is_array())
        throw ParseError("'" + key + "' must be an array of scalar strings");
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string())
            throw ParseError("'" + key + "' entries must be scalar strings");
        out.push_back(parse_scalar(item.get<std::string>(), f));
    }
    return out;
}

ordered_json scalars_to_json(const std::vector<Scalar>& v) {
    ordered_json arr = ordered_json::array();
    for (const Scalar& s : v)
        arr.push_back(s.str());
    return arr;
}

ordered_json identity_to_json(const IdentityReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["status"] = to_string(r.status);
    if (!r.detail.empty())
        j["detail"] = r.detail;
    if (r.value)
        j["value"] = r.value->str();
    if (r.index)
        j["index"] = *r.index;
    return j;
}

ordered_json identities_to_json(const std::vector<IdentityReport>& rs) {
    ordered_json arr = ordered_json::array();
    for (const IdentityReport& r : rs)
        arr.push_back(identity_to_json(r));
    return arr;
}

} // namespace

ordered_json system_to_json(const BipartiteSystem& sys) {
    ordered_json j;
    j["field"] = field_to_json(sys.field());
    j["d"] = sys.d();
    j["b"] = scalars_to_json(sys.b());
    ordered_json c = ordered_json::array();
    for (int i = 1; i <= sys.d(); ++i)
        c.push_back(sys.c_at(i).str());
    j["c"] = c;
    j["theta_star"] = scalars_to_json(sys.theta_star());
    return j;
}

BipartiteSystem system_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("system file must be a JSON object");
    for (const char* key : {"field", "d", "b", "c", "theta_star"})
        if (!j.contains(key))
            throw ParseError(std::string("system file is missing '") + key + "'");
    FieldSpec f = field_from_json(j.at("field"));
    if (!j.at("d").is_number_integer())
        throw ParseError("'d' must be an integer");
    int d = j.at("d").get<int>();
    return BipartiteSystem::build(d, scalars_from_json(j.at("b"), f, "b"),
                                  scalars_from_json(j.at("c"), f, "c"),
                                  scalars_from_json(j.at("theta_star"), f, "theta_star"), f);
}

BipartiteSystem read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return system_from_json(j);
}

void write_system_file(const BipartiteSystem& sys, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << system_to_json(sys).dump(2) << "\n";
}

ordered_json build_report(const BipartiteSystem& sys, const ReportOptions& opts) {
    ordered_json j;
    j["schema"] = 1;
    j["input"] = system_to_json(sys);

    Certification cert{SpectralData{}, Diagram::from_edges(1, {}), {}, {}};
    try {
        cert = certify(sys);
    } catch (const NotMultiplicityFreeError& e) {
        j["multiplicity_free"] = false;
        j["error"] = e.what();
        j["qpoly_pairs"] = ordered_json::array();
        j["exit_status"] = 1;
        return j;
    }
    j["multiplicity_free"] = true;
    j["eigenvalues"] = scalars_to_json(cert.sp.theta);
    j["a_star"] = scalars_to_json(cert.sp.a_star);

    ordered_json edges = ordered_json::array();
    for (auto [a, b] : cert.delta.edges())
        edges.push_back(ordered_json::array({a, b}));
    j["delta_edges"] = edges;

    ordered_json pairs = ordered_json::array();
    ordered_json qpoly_pairs = ordered_json::array();
    for (const ConditionReport& r : cert.pairs) {
        ordered_json pj;
        pj["i"] = r.i;
        pj["j"] = r.j;
        pj["theta_i"] = cert.sp.theta[static_cast<size_t>(r.i)].str();
        pj["theta_j"] = cert.sp.theta[static_cast<size_t>(r.j)].str();
        pj["normalizing"] = r.cond_normalizing;
        pj["tail"] = r.cond_tail;
        pj["distinct_dual"] = r.cond_distinct_dual;
        pj["qpoly"] = r.qpoly;
        if (r.beta) {
            pj["beta"] = r.beta->beta.str();
            pj["beta_vacuous"] = r.beta->vacuous;
        }
        if (r.witness.first_vanishing_cosine)
            pj["first_vanishing_cosine"] = *r.witness.first_vanishing_cosine;
        if (r.witness.duplicate_dual)
            pj["duplicate_dual"] = ordered_json::array(
                {r.witness.duplicate_dual->first, r.witness.duplicate_dual->second});
        pairs.push_back(std::move(pj));
        if (r.qpoly)
            qpoly_pairs.push_back(ordered_json{
                {"i", r.i},
                {"j", r.j},
                {"theta_i", cert.sp.theta[static_cast<size_t>(r.i)].str()},
                {"theta_j", cert.sp.theta[static_cast<size_t>(r.j)].str()}});
    }
    j["pairs"] = pairs;
    j["qpoly_pairs"] = qpoly_pairs;

    if (opts.identities) {
        ordered_json suites = ordered_json::array();
        for (const std::vector<int>& ordering : cert.orderings) {
            ordered_json s;
            s["ordering"] = ordering;
            s["leaf"] = identities_to_json(verify_leaf_identities(sys, cert.sp, ordering));
            s["tail"] = identities_to_json(verify_tail_identities(sys, cert.sp, ordering));
            s["leonard_system"] =
                identities_to_json(verify_bipartite_ls_identities(sys, cert.sp, ordering));
            suites.push_back(std::move(s));
        }
        // Sequence-algebra checks apply once theta* is known distinct.
        bool distinct = true;
        const std::vector<Scalar>& ts = sys.theta_star();
        for (size_t a = 0; a < ts.size() && distinct; ++a)
            for (size_t b = a + 1; b < ts.size() && distinct; ++b)
                distinct = !(ts[a] == ts[b]);
        ordered_json seq = ordered_json::array();
        if (sys.d() >= 3 && distinct)
            seq = identities_to_json(check_frac_equivalence(ts, sys.d()));
        j["identities"] = ordered_json{{"orderings", suites}, {"sequence_algebra", seq}};
    }

    if (opts.oracle) {
        if (sys.d() > 4)
            throw PreconditionError("oracle cross-check is limited to d <= 4");
        LeonardVerdict v = brute_force_leonard(sys.a_matrix(), sys.a_star_matrix());
        ordered_json oj;
        oj["leonard"] = v.leonard;
        if (!v.reason.empty())
            oj["reason"] = v.reason;
        if (v.witness) {
            oj["witness_sigma"] = v.witness->first;
            oj["witness_tau"] = v.witness->second;
        }
        oj["agrees"] = v.leonard == !cert.orderings.empty();
        j["oracle"] = oj;
    }

    j["exit_status"] = cert.orderings.empty() ? 1 : 0;
    return j;
}

} // namespace leonard
