// imagcone: exact computations with based root systems and their
// imaginary cones. Reads a system spec (JSON) and prints JSON or CSV.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "imagcone/json_io.hpp"
#include "imagcone/limitrays.hpp"

using namespace imagcone;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInvariant = 4;

std::size_t default_budget() {
    if (const char* env = std::getenv("IMAGCONE_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10000;
}

Json read_json_text(const std::string& text) {
    return Json::parse(text, nullptr, true);
}

BasedRootSystem load_system(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open system file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return system_from_json(read_json_text(text));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad system JSON: ") + e.what());
    }
}

Vec parse_coeff_vector(const BasedRootSystem& sys, const std::string& text) {
    Json j;
    try {
        j = read_json_text(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad vector: ") + e.what());
    }
    Vec coeffs = vec_from_json(sys.field(), j);
    if (coeffs.size() != sys.rank())
        throw InputError("vector must have one coefficient per simple root");
    Vec v(sys.field(), sys.ambient_dim());
    for (std::size_t i = 0; i < sys.rank(); ++i) v += coeffs[i] * sys.simples()[i];
    return v;
}

Root root_from_coeffs(const BasedRootSystem& sys, const std::string& text) {
    Vec v = parse_coeff_vector(sys, text);
    auto r = sys.is_root(v);
    if (!r || r->vector != v) throw InputError("vector is not a positive root");
    return *r;
}

void emit(Json j, bool with_float) {
    if (with_float) attach_float_approximations(j);
    std::cout << j.dump(2) << "\n";
}

const char* type_name(ComponentType t) {
    switch (t) {
    case ComponentType::Finite: return "finite";
    case ComponentType::Affine: return "affine";
    case ComponentType::Indefinite: return "indefinite";
    }
    return "";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact imaginary-cone computations for based root systems"};
    app.require_subcommand(1);

    std::string system_path;
    bool with_float = false;
    bool csv = false;
    app.add_option("--system,-s", system_path, "system spec JSON file (- for stdin)")
        ->required();
    app.add_flag("--float", with_float, "attach decimal approximations");
    app.add_flag("--csv", csv, "CSV output for point clouds");

    auto* cmd_validate = app.add_subcommand("validate", "parse and validate a system");
    auto* cmd_type = app.add_subcommand("type", "classify the components");

    auto* cmd_roots = app.add_subcommand("roots", "positive roots up to a height");
    std::string height_text = "10";
    cmd_roots->add_option("--height", height_text, "height bound (exact scalar)");

    auto* cmd_facial = app.add_subcommand("facial-subsets", "all facial subsets");

    auto* cmd_kcone = app.add_subcommand("kcone", "fundamental domain K of Z");
    bool via_facials = false;
    cmd_kcone->add_flag("--via-facials", via_facials,
                        "use the facial-witness H-description");

    std::string vector_text;
    std::size_t budget = default_budget();
    auto* cmd_zmember = app.add_subcommand("zmember", "imaginary cone membership");
    cmd_zmember->add_option("--vector", vector_text, "coefficients over the simples")
        ->required();
    cmd_zmember->add_option("--budget", budget, "descent budget");

    auto* cmd_zface = app.add_subcommand("zface", "minimal face of Z containing a point");
    cmd_zface->add_option("--vector", vector_text, "coefficients over the simples")
        ->required();
    cmd_zface->add_option("--budget", budget, "descent budget");

    auto* cmd_zlattice = app.add_subcommand("zface-lattice", "standard special face lattice");

    auto* cmd_closure = app.add_subcommand("facial-closure",
                                           "facial closure of a reflection subgroup");
    std::string generators_text;
    cmd_closure->add_option("--generators", generators_text,
                            "JSON array of root coefficient vectors")
        ->required();
    cmd_closure->add_option("--budget", budget, "descent budget");

    auto* cmd_limit = app.add_subcommand("limit-rays", "limit rays of root rays");
    std::string mode = "exact";
    double eps = 1e-4;
    cmd_limit->add_option("--mode", mode, "exact | numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    cmd_limit->add_option("--height", height_text, "enumeration height bound");
    cmd_limit->add_option("--eps", eps, "cluster radius (numeric mode)");

    auto* cmd_locate = app.add_subcommand("universal-locate",
                                          "locate a point in Z or a D cone");
    cmd_locate->add_option("--vector", vector_text, "coefficients over the simples")
        ->required();
    cmd_locate->add_option("--budget", budget, "descent budget");

    auto* cmd_itinerary = app.add_subcommand("universal-itinerary", "forced itinerary");
    std::size_t steps = 64;
    cmd_itinerary->add_option("--vector", vector_text, "coefficients over the simples")
        ->required();
    cmd_itinerary->add_option("--steps", steps, "maximum itinerary length");

    auto* cmd_dom = app.add_subcommand("dominance", "dominance order test");
    std::string a_text, b_text;
    cmd_dom->add_option("--a", a_text, "first root (coefficients)")->required();
    cmd_dom->add_option("--b", b_text, "second root (coefficients)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        BasedRootSystem sys = load_system(system_path);
        Scalar height = parse_scalar(sys.field(), height_text);

        if (cmd_validate->parsed()) {
            Json j;
            j["ok"] = true;
            j["rank"] = sys.rank();
            j["ambient_dim"] = sys.ambient_dim();
            j["field"] = field_to_json(sys.field());
            j["system"] = system_to_json(sys);
            emit(j, with_float);
        } else if (cmd_type->parsed()) {
            Json comps = Json::array();
            for (const ComponentInfo& c : sys.components()) {
                Json jc;
                jc["simples"] = c.simples;
                jc["type"] = type_name(c.type);
                if (c.delta) jc["delta"] = vec_to_json(*c.delta);
                comps.push_back(jc);
            }
            Json j;
            j["components"] = comps;
            emit(j, with_float);
        } else if (cmd_roots->parsed()) {
            Json arr = Json::array();
            for (const Root& r : sys.positive_roots_up_to_height(height))
                arr.push_back(root_to_json(sys, r));
            Json j;
            j["height"] = scalar_to_json(height);
            j["count"] = arr.size();
            j["roots"] = arr;
            emit(j, with_float);
        } else if (cmd_facial->parsed()) {
            Json arr = Json::array();
            for (const FacialSubset& f : facial_subsets(sys))
                arr.push_back(facial_subset_to_json(f));
            Json j;
            j["facial_subsets"] = arr;
            emit(j, with_float);
        } else if (cmd_kcone->parsed()) {
            PolyCone k = via_facials ? k_cone_via_facials(sys) : k_cone(sys);
            emit(cone_to_json(k), with_float);
        } else if (cmd_zmember->parsed()) {
            Vec v = parse_coeff_vector(sys, vector_text);
            ZMembership z = z_membership(sys, v, budget);
            emit(z_membership_to_json(z), with_float);
            return z.status == ZStatus::Inconclusive ? kExitInconclusive : kExitOk;
        } else if (cmd_zface->parsed()) {
            Vec v = parse_coeff_vector(sys, vector_text);
            ZMembership z = z_membership(sys, v, budget);
            if (z.status == ZStatus::Inconclusive) {
                emit(z_membership_to_json(z), with_float);
                return kExitInconclusive;
            }
            if (z.status == ZStatus::NotInZ) {
                emit(z_membership_to_json(z), with_float);
                return kExitOk;
            }
            ZFace f = z_face_minimal(sys, v, budget);
            Json j;
            j["word"] = f.word;
            j["indices"] = f.indices;
            j["k_cone_standard"] = cone_to_json(f.k_cone_standard);
            emit(j, with_float);
        } else if (cmd_zlattice->parsed()) {
            ZFaceLattice lat(sys);
            Json nodes = Json::array();
            for (std::size_t i = 0; i < lat.size(); ++i)
                nodes.push_back(facial_subset_to_json(lat.node(i)));
            Json meets = Json::array(), joins = Json::array();
            for (std::size_t a = 0; a < lat.size(); ++a) {
                Json mrow = Json::array(), jrow = Json::array();
                for (std::size_t b = 0; b < lat.size(); ++b) {
                    mrow.push_back(lat.meet(a, b));
                    jrow.push_back(lat.join(a, b));
                }
                meets.push_back(mrow);
                joins.push_back(jrow);
            }
            Json j;
            j["nodes"] = nodes;
            j["bottom"] = lat.bottom();
            j["top"] = lat.top();
            j["meet"] = meets;
            j["join"] = joins;
            emit(j, with_float);
        } else if (cmd_closure->parsed()) {
            Json gens = read_json_text(generators_text);
            std::vector<Root> roots;
            for (const auto& g : gens) roots.push_back(root_from_coeffs(sys, g.dump()));
            ReflectionSubgroup sub = sys.canonical_simples(roots);
            FacialClosureResult r = facial_closure(sys, sub, budget);
            if (!r.conclusive) {
                Json j;
                j["status"] = "inconclusive";
                j["steps"] = r.steps;
                emit(j, with_float);
                return kExitInconclusive;
            }
            Json j;
            j["status"] = "ok";
            j["word"] = r.word;
            j["indices"] = r.indices;
            emit(j, with_float);
        } else if (cmd_limit->parsed()) {
            if (mode == "exact") {
                RaySet rays = dihedral_ray_union(sys, height);
                Json j;
                j["exact_rays"] = Json::array();
                for (const Vec& r : rays.exact_rays) j["exact_rays"].push_back(vec_to_json(r));
                j["exact_complete"] = rays.exact_complete;
                j["approx_rays"] = rays.approx;
                emit(j, with_float);
            } else if (csv) {
                std::cout << normalized_roots_csv(sys, height, eps);
            } else {
                Json j;
                j["clusters"] = Json::array();
                for (const Cluster& c : approx_limit_rays(sys, height, eps)) {
                    Json jc;
                    jc["centroid"] = c.centroid;
                    jc["count"] = c.count;
                    j["clusters"].push_back(jc);
                }
                emit(j, with_float);
            }
        } else if (cmd_locate->parsed()) {
            Vec v = parse_coeff_vector(sys, vector_text);
            LocateResult r = locate(sys, v, budget);
            Json j;
            switch (r.status) {
            case LocateStatus::InZ:
                j["status"] = "in_z";
                j["word"] = r.applied;
                break;
            case LocateStatus::InD:
                j["status"] = "in_d";
                j["alpha"] = r.d_index;
                break;
            case LocateStatus::Zero: j["status"] = "zero"; break;
            case LocateStatus::Inconclusive:
                j["status"] = "inconclusive";
                j["steps"] = r.steps;
                break;
            }
            if (r.anomaly) j["anomaly"] = true;
            emit(j, with_float);
            return r.status == LocateStatus::Inconclusive ? kExitInconclusive : kExitOk;
        } else if (cmd_itinerary->parsed()) {
            Vec v = parse_coeff_vector(sys, vector_text);
            Itinerary it = itinerary(sys, v, steps);
            Json j;
            j["prefix"] = it.prefix;
            j["terminated"] = it.terminated;
            j["steps"] = it.steps;
            emit(j, with_float);
        } else if (cmd_dom->parsed()) {
            Root a = root_from_coeffs(sys, a_text);
            Root b = root_from_coeffs(sys, b_text);
            Json j;
            j["dominates"] = sys.dominates(a, b);
            j["pairing"] = scalar_to_json(sys.pair(a.vector, b.vector));
            j["length_a"] = 2 * a.depth - 1;
            j["length_b"] = 2 * b.depth - 1;
            emit(j, with_float);
        }
        return kExitOk;
    } catch (const AlgorithmInvariantViolated& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
