#include "imagcone/json_io.hpp"

namespace imagcone {

Json field_to_json(const Field& f) {
    Json j;
    j["radicands"] = f.radicands();
    return j;
}

Field field_from_json(const Json& j) {
    if (j.is_null()) return Field();
    if (!j.is_object() || !j.contains("radicands"))
        throw InputError("field spec needs a \"radicands\" array");
    std::vector<long> rads;
    for (const auto& r : j.at("radicands")) rads.push_back(r.get<long>());
    return Field(std::move(rads));
}

namespace {

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InputError("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace

Json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return rational_str(s.rational_part());
    Json j = Json::object();
    for (std::size_t mask = 0; mask < s.coeffs().size(); ++mask) {
        if (s.coeffs()[mask] == 0) continue;
        j[s.field().basis_product(mask).get_str()] = rational_str(s.coeffs()[mask]);
    }
    return j;
}

Scalar scalar_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) return Scalar(f, mpq_class(j.get<long>()));
    if (j.is_number_float()) throw InputError("floating literals are not exact; use \"p/q\"");
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.find("sqrt") != std::string::npos) return parse_scalar(f, s);
        return Scalar(f, rational_from_string(s));
    }
    if (j.is_object()) {
        Scalar out(f);
        for (auto it = j.begin(); it != j.end(); ++it) {
            mpz_class product(it.key());
            bool found = false;
            for (std::size_t mask = 0; mask < f.basis_size(); ++mask) {
                if (f.basis_product(mask) == product) {
                    mpq_class c = it.value().is_string()
                                      ? rational_from_string(it.value().get<std::string>())
                                      : mpq_class(it.value().get<long>());
                    out += Scalar(f, c) * Scalar::basis_element(f, mask);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw InputError("sqrt" + it.key() + " is not representable over this field");
        }
        return out;
    }
    throw InputError("unsupported scalar encoding");
}

Json vec_to_json(const Vec& v) {
    Json j = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) j.push_back(scalar_to_json(v[i]));
    return j;
}

Vec vec_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) throw InputError("vector must be a JSON array");
    std::vector<Scalar> entries;
    for (const auto& e : j) entries.push_back(scalar_from_json(f, e));
    return Vec(std::move(entries));
}

Json mat_to_json(const Mat& m) {
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(vec_to_json(m.row(r)));
    return j;
}

Mat mat_from_json(const Field& f, const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(f, r));
    return Mat::from_rows(rows);
}

Json cone_to_json(const PolyCone& c) {
    Json j;
    j["generators"] = Json::array();
    for (const Vec& r : c.rays()) j["generators"].push_back(vec_to_json(r));
    j["lineality"] = Json::array();
    for (const Vec& l : c.lineality()) j["lineality"].push_back(vec_to_json(l));
    j["inequalities"] = Json::array();
    for (const Vec& h : c.inequalities()) j["inequalities"].push_back(vec_to_json(h));
    j["equations"] = Json::array();
    for (const Vec& e : c.equations()) j["equations"].push_back(vec_to_json(e));
    return j;
}

PolyCone cone_from_json(const Field& f, const Json& j) {
    std::vector<Vec> gens, lin;
    if (j.contains("generators"))
        for (const auto& g : j.at("generators")) gens.push_back(vec_from_json(f, g));
    if (j.contains("lineality"))
        for (const auto& l : j.at("lineality")) lin.push_back(vec_from_json(f, l));
    std::size_t dim = 0;
    if (!gens.empty()) dim = gens[0].size();
    else if (!lin.empty()) dim = lin[0].size();
    else if (j.contains("equations") && !j.at("equations").empty())
        dim = j.at("equations").front().size();
    // user-supplied generators need not be extreme; rebuild canonically
    for (const Vec& l : lin) {
        gens.push_back(l);
        gens.push_back(-l);
    }
    return PolyCone::from_generators(f, dim, gens);
}

Json root_to_json(const BasedRootSystem& sys, const Root& r) {
    Json j;
    j["coeffs"] = vec_to_json(r.coeffs);
    j["vector"] = vec_to_json(r.vector);
    j["height"] = scalar_to_json(sys.height(r.vector));
    j["depth"] = r.depth;
    j["word"] = r.word;
    return j;
}

Json facial_subset_to_json(const FacialSubset& f) {
    Json j;
    j["indices"] = f.indices;
    j["witness"] = vec_to_json(f.witness);
    j["special"] = f.special;
    return j;
}

Json z_membership_to_json(const ZMembership& z) {
    Json j;
    switch (z.status) {
    case ZStatus::InZ:
        j["status"] = "in_z";
        j["word"] = z.applied;
        j["k"] = vec_to_json(z.k);
        break;
    case ZStatus::NotInZ: {
        j["status"] = "not_in_z";
        const char* cert = "";
        switch (z.certificate) {
        case ZCertificate::NotInPositiveCone: cert = "not_in_positive_cone"; break;
        case ZCertificate::OrbitLeftPositiveCone: cert = "orbit_left_positive_cone"; break;
        case ZCertificate::PositiveNorm: cert = "positive_norm"; break;
        case ZCertificate::None: cert = "none"; break;
        }
        j["certificate"] = cert;
        if (z.certificate == ZCertificate::OrbitLeftPositiveCone) j["word"] = z.applied;
        break;
    }
    case ZStatus::Inconclusive:
        j["status"] = "inconclusive";
        j["steps"] = z.steps;
        break;
    }
    return j;
}

BasedRootSystem system_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("system spec must be a JSON object");
    const int modes = int(j.contains("gram")) + int(j.contains("simples")) +
                      int(j.contains("coxeter_labels"));
    if (modes != 1)
        throw InputError("exactly one of gram / form+simples / coxeter_labels expected");
    if (j.contains("coxeter_labels")) {
        std::vector<std::vector<int>> labels;
        for (const auto& row : j.at("coxeter_labels"))
            labels.push_back(row.get<std::vector<int>>());
        return BasedRootSystem::from_labels(labels);
    }
    Field f = field_from_json(j.contains("field") ? j.at("field") : Json());
    if (j.contains("gram")) return BasedRootSystem::from_gram(f, mat_from_json(f, j.at("gram")));
    if (!j.contains("form")) throw InputError("simples need an accompanying form");
    Mat form = mat_from_json(f, j.at("form"));
    std::vector<Vec> simples;
    for (const auto& s : j.at("simples")) simples.push_back(vec_from_json(f, s));
    return BasedRootSystem::from_vectors(f, form, simples);
}

Json system_to_json(const BasedRootSystem& sys) {
    Json j;
    j["field"] = field_to_json(sys.field());
    j["form"] = mat_to_json(sys.form());
    j["simples"] = Json::array();
    for (const Vec& s : sys.simples()) j["simples"].push_back(vec_to_json(s));
    j["rho"] = vec_to_json(sys.rho());
    return j;
}

namespace {

double approx_of_scalar_json(const Field& f, const Json& j) {
    return scalar_from_json(f, j).to_double();
}

} // namespace

void attach_float_approximations(Json& j) {
    // Walk objects and arrays; wherever a value parses as an exact scalar
    // over some field with sqrt parts, nothing changes in place; instead
    // arrays of scalars get a sibling "<key>_approx".
    if (!j.is_object()) return;
    Json additions = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
        Json& val = it.value();
        if (val.is_object()) {
            attach_float_approximations(val);
            continue;
        }
        if (!val.is_array()) continue;
        // arrays of vectors or a flat vector of scalars
        auto to_double = [](const Json& s) -> std::optional<double> {
            try {
                Field any({2, 3, 5});
                return approx_of_scalar_json(any, s);
            } catch (const Error&) {
                return std::nullopt;
            }
        };
        bool flat = true, nested = true;
        Json flat_out = Json::array(), nested_out = Json::array();
        for (const auto& e : val) {
            if (auto d = to_double(e)) flat_out.push_back(*d);
            else flat = false;
            if (e.is_array()) {
                Json row = Json::array();
                bool row_ok = true;
                for (const auto& x : e) {
                    if (auto d = to_double(x)) row.push_back(*d);
                    else row_ok = false;
                }
                if (row_ok) nested_out.push_back(row);
                else nested = false;
            } else {
                nested = false;
            }
        }
        if (!val.empty() && flat) additions[it.key() + "_approx"] = flat_out;
        else if (!val.empty() && nested) additions[it.key() + "_approx"] = nested_out;
    }
    for (auto it = additions.begin(); it != additions.end(); ++it)
        j[it.key()] = it.value();
}

} // namespace imagcone
