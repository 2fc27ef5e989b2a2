// Command-line front end: exact Chern-Moser normal forms, hyperquadric
// automorphisms and umbilic/reduction tests for truncated real
// hypersurfaces.  Every command prints a machine-readable JSON report to
// stdout (stderr when a file is streamed to stdout) and signals errors
// through the exit code: 1 file/validation, 2 mathematical precondition,
// 3 irrational scaling.

#include "cm/io.hpp"
#include "cm/normalize.hpp"
#include "cm/quadric_group.hpp"
#include "cm/transform.hpp"
#include "cm/umbilic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using json = nlohmann::ordered_json;
using namespace cm;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool g_report_to_stderr = false;

void write_text(const std::string& path, const std::string& content) {
    if (path.empty()) return;
    if (path == "-") {
        std::cout << content;
        g_report_to_stderr = true;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    out << content;
}

void print_report(const json& rep) {
    (g_report_to_stderr ? std::cerr : std::cout) << rep.dump(2) << "\n";
}

json sigma_json(const InitialValue& s) { return json::parse(emit_sigma(s)); }

json violations_json(const NormalFormReport& rep) {
    json v = json::array();
    for (const auto& viol : rep.violations) {
        json j;
        j["kind"] = to_string(viol.kind);
        j["bidegree"] = {viol.s, viol.t};
        j["weight"] = viol.weight;
        v.push_back(std::move(j));
    }
    return v;
}

int weight_or_truncation(int weight, const Hypersurface& M, const char* who) {
    if (weight == 0) return M.truncation();
    if (weight > M.truncation())
        throw under_truncated(std::string(who) +
                              ": requested weight exceeds the file truncation");
    return weight;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact normal forms of nondegenerate real hypersurfaces"};
    app.require_subcommand(1);

    std::string surface_path, map_path, sigma_path, sigma2_path;
    std::string emit_surface_path, emit_map_path, emit_sigma_path, emit_psi_path, emit_phi_path;
    std::string at_u = "0/1";
    std::string variant = "f43";
    int weight = 0;
    bool identity_sigma = false;
    bool moser = false, webster = false;

    auto* c_check = app.add_subcommand("check", "normal form predicate for a surface file");
    c_check->add_option("surface", surface_path)->required();

    auto* c_norm = app.add_subcommand("normalize", "order-by-order normalization");
    c_norm->add_option("surface", surface_path)->required();
    c_norm->add_option("--sigma", sigma_path, "initial value file");
    c_norm->add_flag("--identity", identity_sigma, "use the identity initial value");
    c_norm->add_option("--weight", weight, "target weight (default: file truncation)");
    c_norm->add_option("--emit-surface", emit_surface_path);
    c_norm->add_option("--emit-map", emit_map_path);

    auto* c_trans = app.add_subcommand("transform", "push a surface forward along a map");
    c_trans->add_option("surface", surface_path)->required();
    c_trans->add_option("--map", map_path)->required();
    c_trans->add_option("--emit-surface", emit_surface_path);

    auto* c_phis = app.add_subcommand("phi-sigma", "hyperquadric automorphism series");
    c_phis->add_option("--sigma", sigma_path)->required();
    c_phis->add_option("--weight", weight, "truncation weight")->required();
    c_phis->add_option("--emit-map", emit_map_path);

    auto* c_group = app.add_subcommand("group", "isotropy group operations");
    auto* g_compose = c_group->add_subcommand("compose", "group product");
    g_compose->add_option("sigma1", sigma_path)->required();
    g_compose->add_option("sigma2", sigma2_path)->required();
    g_compose->add_option("--emit-sigma", emit_sigma_path);
    auto* g_invert = c_group->add_subcommand("invert", "group inverse");
    g_invert->add_option("sigma", sigma_path)->required();
    g_invert->add_option("--emit-sigma", emit_sigma_path);
    auto* g_decomp = c_group->add_subcommand("decompose", "factor through the a-part");
    g_decomp->add_option("sigma", sigma_path)->required();
    g_decomp->add_option("--emit-psi", emit_psi_path);
    g_decomp->add_option("--emit-phi", emit_phi_path);

    auto* c_umb = app.add_subcommand("umbilic", "umbilicity at a point of the distinguished curve");
    c_umb->add_option("surface", surface_path)->required();
    c_umb->add_option("--at-u", at_u, "translation parameter p/q (default 0/1)");

    auto* c_red = app.add_subcommand("reduce", "Moser / Webster reduced normal form");
    c_red->add_option("surface", surface_path)->required();
    c_red->add_flag("--moser", moser);
    c_red->add_flag("--webster", webster);
    c_red->add_option("--variant", variant, "f43 or f52 (Moser)");
    c_red->add_option("--emit-surface", emit_surface_path);

    auto* c_low = app.add_subcommand("lowest-weight", "lowest nonquadratic weight");
    c_low->add_option("surface", surface_path)->required();

    auto* c_lower = app.add_subcommand("lower-weight", "codegree lowering normalization");
    c_lower->add_option("surface", surface_path)->required();
    c_lower->add_option("--weight", weight);
    c_lower->add_option("--emit-surface", emit_surface_path);

    auto* c_sph = app.add_subcommand("spherical", "sphericity at truncation order");
    c_sph->add_option("surface", surface_path)->required();
    c_sph->add_option("--weight", weight);

    CLI11_PARSE(app, argc, argv);

    json rep;
    try {
        if (c_check->parsed()) {
            auto M = parse_surface(read_text(surface_path));
            auto nf = check_normal_form(M);
            rep["command"] = "check";
            rep["status"] = "ok";
            rep["n"] = M.dim();
            rep["e"] = M.sig().e;
            rep["truncation_weight"] = M.truncation();
            rep["is_normal"] = nf.is_normal;
            rep["violations"] = violations_json(nf);
        } else if (c_norm->parsed()) {
            auto M = parse_surface(read_text(surface_path));
            if (identity_sigma ? !sigma_path.empty() : sigma_path.empty())
                throw precondition_error("normalize needs exactly one of --sigma / --identity");
            InitialValue sigma = identity_sigma ? InitialValue::identity(M.sig())
                                                : parse_sigma(read_text(sigma_path));
            const int K = weight_or_truncation(weight, M, "normalize");
            auto res = normalize(M, sigma, K);
            rep["command"] = "normalize";
            rep["status"] = "ok";
            rep["weight"] = K;
            rep["surface_is_normal"] = check_normal_form(res.surface).is_normal;
            rep["identity_residual_zero"] = verify_identity_residual(M, res).is_zero();
            rep["initial_value_roundtrip"] =
                extract_initial_value(res.map, M.sig()) == sigma;
            json log = json::array();
            for (const auto& e : res.log)
                log.push_back({{"weight", e.weight},
                               {"unknowns", e.unknowns},
                               {"equations", e.equations},
                               {"rank", e.rank}});
            rep["solve_log"] = std::move(log);
            write_text(emit_surface_path, emit_surface(res.surface));
            write_text(emit_map_path, emit_map(res.map));
        } else if (c_trans->parsed()) {
            auto M = parse_surface(read_text(surface_path));
            auto phi = parse_map(read_text(map_path));
            auto img = transform_hypersurface(phi, M);
            rep["command"] = "transform";
            rep["status"] = "ok";
            rep["truncation_weight"] = img.truncation();
            rep["identity_residual_zero"] =
                transform_residual(phi, M, img.defining_series()).is_zero();
            rep["image_is_normal"] = check_normal_form(img).is_normal;
            write_text(emit_surface_path, emit_surface(img));
        } else if (c_phis->parsed()) {
            auto sigma = parse_sigma(read_text(sigma_path));
            if (weight < 2) throw precondition_error("phi-sigma needs --weight >= 2");
            auto phi = phi_sigma_series(sigma, weight);
            rep["command"] = "phi-sigma";
            rep["status"] = "ok";
            rep["weight"] = weight;
            rep["extraction_roundtrip"] =
                extract_initial_value(phi, sigma.sig()) == sigma;
            write_text(emit_map_path, emit_map(phi));
        } else if (g_compose->parsed()) {
            auto s1 = parse_sigma(read_text(sigma_path));
            auto s2 = parse_sigma(read_text(sigma2_path));
            auto prod = sigma_compose(s1, s2);
            rep["command"] = "group compose";
            rep["status"] = "ok";
            rep["sigma"] = sigma_json(prod);
            write_text(emit_sigma_path, emit_sigma(prod));
        } else if (g_invert->parsed()) {
            auto s = parse_sigma(read_text(sigma_path));
            auto inv = sigma_inverse(s);
            rep["command"] = "group invert";
            rep["status"] = "ok";
            rep["sigma"] = sigma_json(inv);
            rep["involution_check"] = sigma_inverse(inv) == s;
            write_text(emit_sigma_path, emit_sigma(inv));
        } else if (g_decomp->parsed()) {
            auto s = parse_sigma(read_text(sigma_path));
            auto [phi, psi] = sigma_decompose(s);
            rep["command"] = "group decompose";
            rep["status"] = "ok";
            rep["phi"] = sigma_json(phi);
            rep["psi"] = sigma_json(psi);
            rep["product_check"] = sigma_compose(phi, psi) == s;
            write_text(emit_phi_path, emit_sigma(phi));
            write_text(emit_psi_path, emit_sigma(psi));
        } else if (c_umb->parsed()) {
            auto M = parse_surface(read_text(surface_path));
            auto u0 = Rational::parse(at_u);
            if (!u0) throw validation_error("--at-u expects a canonical rational p/q");
            auto T = u0->is_zero() ? M : translate_along_u(M, *u0);
            rep["command"] = "umbilic";
            rep["status"] = "ok";
            rep["at_u"] = u0->str();
            rep["umbilic"] = is_umbilic_origin(T);
        } else if (c_red->parsed()) {
            auto M = parse_surface(read_text(surface_path));
            if (moser == webster)
                throw precondition_error("reduce needs exactly one of --moser / --webster");
            rep["command"] = "reduce";
            rep["status"] = "ok";
            ReductionTrace tr = [&] {
                if (moser) {
                    if (variant != "f43" && variant != "f52")
                        throw precondition_error("--variant must be f43 or f52");
                    return moser_reduce(M, variant == "f43" ? MoserVariant::F43
                                                            : MoserVariant::F52);
                }
                return webster_reduce(M);
            }();
            json steps = json::array();
            for (const auto& st : tr.steps) {
                const char* kind = st.kind == ReductionStep::Kind::AStep      ? "a-step"
                                   : st.kind == ReductionStep::Kind::ScaleStep ? "scale-step"
                                                                               : "r-step";
                steps.push_back({{"kind", kind}, {"sigma", sigma_json(st.sigma)}});
            }
            rep["steps"] = std::move(steps);
            rep["final_is_normal"] = check_normal_form(tr.final).is_normal;
            write_text(emit_surface_path, emit_surface(tr.final));
        } else if (c_low->parsed()) {
            auto M = parse_surface(read_text(surface_path));
            auto lw = lowest_weight(M);
            rep["command"] = "lowest-weight";
            rep["status"] = "ok";
            if (lw)
                rep["lowest_weight"] = *lw;
            else
                rep["lowest_weight"] = "flat-to-truncation";
            auto cd = lowest_codegree(M);
            if (cd)
                rep["lowest_codegree"] = *cd;
            else
                rep["lowest_codegree"] = "flat-to-truncation";
        } else if (c_lower->parsed()) {
            auto M = parse_surface(read_text(surface_path));
            const int K = weight_or_truncation(weight, M, "lower-weight");
            auto res = lower_weight(M, K);
            rep["command"] = "lower-weight";
            rep["status"] = "ok";
            json avec = json::array();
            for (const auto& c : res.a) avec.push_back({{"re", c.re.str()}, {"im", c.im.str()}});
            rep["a"] = std::move(avec);
            rep["lowest_codegree"] = *lowest_codegree(res.normalization.surface);
            write_text(emit_surface_path, emit_surface(res.normalization.surface));
        } else if (c_sph->parsed()) {
            auto M = parse_surface(read_text(surface_path));
            const int K = weight_or_truncation(weight, M, "spherical");
            rep["command"] = "spherical";
            rep["status"] = "ok";
            rep["weight"] = K;
            rep["spherical"] = spherical_to_order(M, K);
        }
    } catch (const irrational_scaling& e) {
        rep["status"] = "error";
        rep["error_kind"] = "irrational-scaling";
        rep["message"] = e.what();
        rep["radicand"] = e.radicand;
        print_report(rep);
        return 3;
    } catch (const parse_error& e) {
        rep["status"] = "error";
        rep["error_kind"] = "parse";
        rep["message"] = e.what();
        print_report(rep);
        return 1;
    } catch (const validation_error& e) {
        rep["status"] = "error";
        rep["error_kind"] = "validation";
        rep["message"] = e.what();
        print_report(rep);
        return 1;
    } catch (const error& e) {
        // precondition, truncation, dimension and solver errors
        rep["status"] = "error";
        rep["error_kind"] = "precondition";
        rep["message"] = e.what();
        print_report(rep);
        return 2;
    }
    print_report(rep);
    return 0;
}
