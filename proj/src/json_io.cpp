#include "favmod/json_io.hpp"

#include <stdexcept>

namespace favmod {

json exponent_to_json(const MultiExponent& p) {
    json a = json::array();
    for (int i = 0; i < p.size(); ++i) a.push_back(p[i]);
    return a;
}

MultiExponent exponent_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("exponent: expected array");
    std::vector<int> v;
    for (const auto& x : j) v.push_back(x.get<int>());
    return MultiExponent(std::move(v));
}

json lattice_to_json(const LatticeSet& s) {
    json a = json::array();
    for (const MultiExponent& p : s) a.push_back(exponent_to_json(p));
    return a;
}

LatticeSet lattice_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("lattice set: expected array");
    LatticeSet s;
    for (const auto& x : j) s.push_back(exponent_from_json(x));
    return s;
}

json rational_to_json(const Rational& r) { return to_string(r); }

json qvector_to_json(const QVector& v) {
    json a = json::array();
    for (const Rational& x : v) a.push_back(rational_to_json(x));
    return a;
}

json polytope_to_json(const PolytopeSpec& p) {
    json j;
    j["dim"] = p.dim;
    j["labels"] = p.labels;
    json ineqs = json::array();
    for (const Inequality& iq : p.ineqs) {
        json row;
        row["coeffs"] = iq.coeffs;
        row["rhs"] = iq.rhs;
        row["name"] = iq.name;
        ineqs.push_back(std::move(row));
    }
    j["inequalities"] = std::move(ineqs);
    return j;
}

json essential_to_json(const EssentialResult& r, const std::vector<std::string>& labels) {
    json j;
    j["labels"] = labels;
    j["dimension"] = r.rank();
    j["d_max"] = r.d_max;
    j["essential"] = lattice_to_json(r.es);
    json pretty = json::array();
    for (const MultiExponent& p : r.es) {
        std::string s;
        for (int i = 0; i < p.size(); ++i)
            for (int t = 0; t < p[i]; ++t) s += (s.empty() ? "" : " ") + labels[i];
        pretty.push_back(s.empty() ? "1" : s);
    }
    j["essential_monomials"] = std::move(pretty);
    j["annihilator_generators"] = lattice_to_json(r.annihilator_gens);
    json gen_pretty = json::array();
    for (const MultiExponent& p : r.annihilator_gens) {
        std::string s;
        for (int i = 0; i < p.size(); ++i)
            for (int t = 0; t < p[i]; ++t) s += (s.empty() ? "" : " ") + labels[i];
        gen_pretty.push_back(s);
    }
    j["annihilator_monomials"] = std::move(gen_pretty);
    j["pbw_hilbert"] = r.pbw_hilbert;
    return j;
}

json module_to_json(const RepModule& m) {
    json j;
    j["name"] = m.name;
    j["type"] = m.type.name();
    j["dimension"] = m.dim();
    j["basis"] = m.basis_labels;
    j["cyclic_index"] = m.cyclic_index;
    j["operators"] = json::object();
    for (int i = 0; i < m.num_ops(); ++i) {
        json rows = json::array();
        for (const QVector& row : m.ops[i]) rows.push_back(qvector_to_json(row));
        j["operators"][m.op_labels[i]] = std::move(rows);
    }
    return j;
}

json rays_to_json(const std::vector<Ray>& rays) {
    json a = json::array();
    for (const Ray& r : rays) {
        json j;
        j["v"] = r.v;
        j["kind"] = r.is_coordinate ? "coordinate" : "path";
        j["name"] = r.name;
        a.push_back(std::move(j));
    }
    return a;
}

json demazure_to_json(const std::vector<DemazureRoot>& roots, const std::vector<Ray>& rays) {
    json a = json::array();
    for (const DemazureRoot& r : roots) {
        json j;
        j["m"] = r.m;
        j["ray"] = rays[r.ray_index].name;
        a.push_back(std::move(j));
    }
    return a;
}

json make_report(const std::string& command, const json& inputs) {
    json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["inputs"] = inputs;
    return j;
}

}  // namespace favmod
