#pragma once

#include "klein4/classify.hpp"
#include "klein4/constructors.hpp"
#include "klein4/quiver.hpp"
#include "klein4/representation.hpp"
#include "klein4/verify.hpp"

#include <json.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace klein4 {

using Json = nlohmann::ordered_json;

inline long long int_to_ll(const Int& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw std::domain_error("entry too large for JSON");
    return static_cast<long long>(v);
}

inline Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_ll(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j.at(i).is_array() || j.at(i).size() != cols)
            throw std::invalid_argument("matrix JSON must be rectangular");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!j.at(i).at(k).is_number_integer())
                throw std::invalid_argument("matrix entries must be integers");
            m(i, k) = j.at(i).at(k).get<long long>();
        }
    }
    return m;
}

/// Representation wire schema:
/// {"name": str, "params": {"n": int, "f": bitstring?, "twists": [str]},
///  "degree": int, "a": [[int]], "b": [[int]]}
inline Json rep_to_json(const Representation& rep) {
    const Provenance& p = rep.provenance();
    Json params;
    params["n"] = p.n;
    if (p.f) params["f"] = p.f->bitstring();
    params["twists"] = p.ops;
    Json j;
    j["name"] = p.base;
    j["params"] = std::move(params);
    j["degree"] = rep.degree();
    j["a"] = matrix_to_json(rep.gen_a());
    j["b"] = matrix_to_json(rep.gen_b());
    return j;
}

inline Representation rep_from_json(const Json& j) {
    Provenance p;
    p.base = j.at("name").get<std::string>();
    const Json& params = j.at("params");
    p.n = params.at("n").get<int>();
    if (params.contains("f")) p.f = F2Poly::parse(params.at("f").get<std::string>());
    if (params.contains("twists"))
        for (const auto& t : params.at("twists")) p.ops.push_back(t.get<std::string>());
    Representation rep(matrix_from_json(j.at("a")), matrix_from_json(j.at("b")), std::move(p));
    if (j.at("degree").get<std::size_t>() != rep.degree())
        throw std::invalid_argument("degree field disagrees with matrix size");
    if (!rep.validate())
        throw std::invalid_argument("matrices violate the representation axioms");
    return rep;
}

/// Root / dimension-vector schema: {"d": [d0,d1,d2,d3,d4], "B": int}
inline Json dimvec_to_json(const DimensionVector& d) {
    Json j;
    j["d"] = {d[0], d[1], d[2], d[3], d[4]};
    j["B"] = form_B(d);
    return j;
}

inline Json report_to_json(const Report& r) {
    Json j;
    j["claim"] = r.claim;
    j["paper_location"] = r.paper_location;
    j["computed"] = r.computed;
    j["printed"] = r.printed;
    j["verdict"] = r.verdict;
    return j;
}

inline Json orbit_to_json(const OrbitRecord& orb) {
    Json members = Json::array();
    for (const auto& f : orb.members) members.push_back(f.bitstring());
    Json st = Json::array();
    for (const auto& phi : orb.stabilizer) st.push_back(phi.word_string());
    Json j;
    j["members"] = std::move(members);
    j["representative"] = orb.representative.bitstring();
    j["stabilizer"] = std::move(st);
    j["stabilizer_order"] = orb.stabilizer.size();
    return j;
}

inline Json class_entry_to_json(const ClassEntry& e, bool expand) {
    Json j;
    j["row"] = e.row;
    j["name"] = e.rep.display_name();
    j["n"] = e.n;
    if (e.f) j["f"] = e.f->bitstring();
    j["degree"] = e.rep.degree();
    if (e.dimvec)
        j["d"] = {(*e.dimvec)[0], (*e.dimvec)[1], (*e.dimvec)[2], (*e.dimvec)[3],
                  (*e.dimvec)[4]};
    else
        j["d"] = nullptr;
    Json st = Json::array();
    for (const auto& phi : e.st) st.push_back(phi.word_string());
    j["St"] = std::move(st);
    j["S"] = e.S;
    if (expand) {
        Json reps = Json::array();
        for (const auto& rep : expand_to_equivalence(e)) reps.push_back(rep_to_json(rep));
        j["expanded"] = std::move(reps);
    }
    return j;
}

}  // namespace klein4
