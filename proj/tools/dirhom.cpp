// dirhom: homology of directed graphs from the command line.
//
// Subcommands: `mlp gen` (architecture digraph generation), `hom` (path or
// directed-flag homology of an edge list), `verify` (closed-form and oracle
// cross-checks), `curve` (Betti numbers across the weight-magnitude
// threshold filtration).
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 resource
// guard tripped.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dirhom/dfc_homology.hpp"
#include "dirhom/edge_list.hpp"
#include "dirhom/filtration.hpp"
#include "dirhom/graph.hpp"
#include "dirhom/oracle.hpp"
#include "dirhom/path_homology.hpp"
#include "dirhom/report.hpp"

namespace {

using namespace dirhom;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_threads() {
    if (const char* env = std::getenv("HOMOLOGY_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
}

ParsedGraph load_graph(const std::string& path) {
    if (path == "-") return parse_edge_list(std::cin);
    return parse_edge_list_file(path);
}

// Acyclic inputs default to their longest path; cyclic inputs must state a
// bound, otherwise the allowed-path enumeration has no natural stopping
// point.
int resolve_max_degree(const Digraph& g, std::optional<int> user_choice) {
    if (user_choice) {
        if (*user_choice < 0) throw std::invalid_argument("--max-dim must be nonnegative");
        return *user_choice;
    }
    std::optional<int> longest = longest_path_length(g);
    if (!longest)
        throw GuardError("input digraph is cyclic; pass --max-dim to bound the computation");
    return *longest;
}

std::vector<FieldSpec> parse_fields(const std::string& csv) {
    std::vector<FieldSpec> fields;
    std::istringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) fields.push_back(FieldSpec::parse(token));
    if (fields.empty()) throw std::invalid_argument("no fields given");
    return fields;
}

std::string format_betti(const std::vector<Index>& betti) {
    std::string out = "[";
    for (std::size_t i = 0; i < betti.size(); ++i)
        out += (i ? ", " : "") + std::to_string(betti[i]);
    return out + "]";
}

// ---------------------------------------------------------------- mlp gen

int run_mlp_gen(const std::vector<int>& widths, const std::string& out_path, bool unit_weights) {
    MlpSpec spec(widths);
    Digraph g = mlp_digraph(spec);
    if (unit_weights) {
        std::vector<Decimal> weights(static_cast<std::size_t>(g.arc_count()),
                                     Decimal::from_int(1));
        write_output(out_path, write_edge_list(WeightedDigraph(std::move(g), weights)));
    } else {
        write_output(out_path, write_edge_list(g));
    }
    return 0;
}

// -------------------------------------------------------------------- hom

int run_hom(const std::string& kind_name, const std::string& input,
            const std::string& field_name, std::optional<bool> reduced_flag,
            std::optional<int> max_dim, const std::string& json_path) {
    HomologyKind kind = homology_kind_from_string(kind_name);
    FieldSpec field = FieldSpec::parse(field_name);
    ParsedGraph parsed = load_graph(input);
    const Digraph& g = parsed.digraph;

    bool reduced = reduced_flag.value_or(kind == HomologyKind::path);
    int md = resolve_max_degree(g, max_dim);

    auto t0 = std::chrono::steady_clock::now();
    HomologySummary summary = kind == HomologyKind::path ? path_betti(g, md, reduced, field)
                                                         : dfc_betti(g, md, field, reduced);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::cout << render_text_report(summary, seconds);
    if (!json_path.empty())
        write_output(json_path, summary_to_json(summary, seconds).dump(2) + "\n");
    return 0;
}

// ----------------------------------------------------------------- verify

bool verify_one_spec(const MlpSpec& spec, const std::vector<FieldSpec>& fields) {
    Digraph g = mlp_digraph(spec);
    int top = spec.layer_count() - 1;
    int dfc_md = 2;

    std::cout << "mlp";
    for (int w : spec.widths()) std::cout << ' ' << w;
    std::cout << ": V=" << g.vertex_count() << " E=" << g.arc_count() << "\n";

    std::vector<Index> path_expected = mlp_path_betti_prediction(spec, top);
    SimplicialBetti dfc_expected = mlp_dfc_betti_prediction(spec);
    std::vector<Index> dfc_expected_vec = {dfc_expected.beta0, dfc_expected.beta1, 0};
    SimplicialBetti euler = graph_simplicial_betti(underlying_undirected(g));

    bool ok = true;
    for (const FieldSpec& field : fields) {
        std::vector<Index> path_engine = path_betti(g, top, /*reduced=*/true, field).betti_vector();
        std::vector<Index> dfc_engine = dfc_betti(g, dfc_md, field).betti_vector();
        bool path_ok = path_engine == path_expected;
        bool dfc_ok = dfc_engine == dfc_expected_vec &&
                      euler.beta0 == dfc_expected.beta0 && euler.beta1 == dfc_expected.beta1;
        std::cout << "  field " << field.name() << ": path " << format_betti(path_engine)
                  << " vs closed form " << format_betti(path_expected)
                  << (path_ok ? "  ok" : "  MISMATCH") << "\n";
        std::cout << "  field " << field.name() << ": dfc  " << format_betti(dfc_engine)
                  << " vs closed form " << format_betti(dfc_expected_vec) << " vs euler ["
                  << euler.beta0 << ", " << euler.beta1 << ", 0]"
                  << (dfc_ok ? "  ok" : "  MISMATCH") << "\n";
        ok = ok && path_ok && dfc_ok;
    }
    if (has_reciprocal_arcs(g))
        std::cout << "  warning: reciprocal arcs present; dfc/simplicial equality is not "
                     "guaranteed\n";
    return ok;
}

bool run_verify_random(int count, std::uint64_t base_seed) {
    bool ok = true;
    std::cout << "random corpus: " << count << " digraphs, seeds " << base_seed << ".."
              << base_seed + static_cast<std::uint64_t>(count) - 1
              << " (<=7 vertices, arc probability 0.3), max degree 4\n";
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        Digraph g = random_digraph(seed);
        bool graph_ok = true;
        for (bool reduced : {false, true}) {
            FieldSpec q = FieldSpec::rationals();
            graph_ok = graph_ok &&
                       path_betti(g, 4, reduced, q).betti_vector() ==
                           oracle::oracle_path_betti(g, 4, reduced).betti_vector() &&
                       dfc_betti(g, 4, q, reduced).betti_vector() ==
                           oracle::oracle_dfc_betti(g, 4, reduced).betti_vector();
        }
        std::cout << "  seed " << seed << ": V=" << g.vertex_count() << " E=" << g.arc_count()
                  << (graph_ok ? "  ok" : "  MISMATCH") << "\n";
        ok = ok && graph_ok;
    }
    return ok;
}

// ------------------------------------------------------------------ curve

int run_curve(const std::string& input, const std::string& kind_name,
              const std::string& field_name, std::optional<bool> reduced_flag,
              std::optional<int> max_dim, int threads, const std::string& out_path) {
    HomologyKind kind = homology_kind_from_string(kind_name);
    FieldSpec field = FieldSpec::parse(field_name);
    ParsedGraph parsed = load_graph(input);
    if (!parsed.has_weights())
        throw ParseError(1, "curve requires a weighted edge list (src dst weight)");

    bool reduced = reduced_flag.value_or(kind == HomologyKind::path);
    int md = resolve_max_degree(parsed.digraph, max_dim);
    BettiCurve curve = betti_curve(*parsed.weighted, kind, md, reduced, field, threads);
    write_output(out_path, to_csv(curve));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homology of directed graphs: path and directed-flag Betti numbers, "
                 "closed-form architecture checks, threshold-filtration Betti curves"};
    app.require_subcommand(1);

    // mlp gen
    auto* mlp = app.add_subcommand("mlp", "architecture digraph utilities");
    mlp->require_subcommand(1);
    auto* gen = mlp->add_subcommand("gen", "emit the layered digraph for the given layer widths");
    std::vector<int> gen_widths;
    std::string gen_out;
    bool gen_unit_weights = false;
    gen->add_option("widths", gen_widths, "layer widths, e.g. 4 10 3")->required();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");
    gen->add_flag("--unit-weights", gen_unit_weights, "attach weight 1 to every arc");

    // hom
    auto* hom = app.add_subcommand("hom", "compute homology of an edge-list digraph");
    std::string hom_kind, hom_input, hom_field = "q", hom_json;
    std::optional<bool> hom_reduced;
    std::optional<int> hom_max_dim;
    hom->add_option("kind", hom_kind, "path | dfc")->required()->check(CLI::IsMember({"path", "dfc"}));
    hom->add_option("input", hom_input, "edge-list file, or - for stdin")->required();
    hom->add_option("--field", hom_field, "coefficient field: q, gf2, gf3, ... (default q)");
    hom->add_flag("--reduced,!--non-reduced", hom_reduced,
                  "reduced homology (default: reduced for path, non-reduced for dfc)");
    hom->add_option("--max-dim", hom_max_dim,
                    "top degree (default: longest path; required for cyclic inputs)");
    hom->add_option("--json", hom_json, "also write a JSON report to this file (- for stdout)");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "check engine homology of layered digraphs against the closed forms, or "
                  "against the brute-force oracle with --random");
    std::vector<int> verify_widths;
    std::string verify_fields = "q";
    std::optional<int> verify_random;
    std::uint64_t verify_seed = 1;
    verify->add_option("widths", verify_widths, "layer widths");
    verify->add_option("--fields", verify_fields, "comma-separated fields (default q)");
    verify->add_option("--random", verify_random, "verify N random digraphs against the oracle");
    verify->add_option("--seed", verify_seed, "base seed for --random (default 1)");

    // curve
    auto* curve = app.add_subcommand("curve", "Betti curve over weight-magnitude thresholds");
    std::string curve_input, curve_kind = "path", curve_field = "q", curve_out;
    std::optional<bool> curve_reduced;
    std::optional<int> curve_max_dim;
    int curve_threads = default_threads();
    curve->add_option("input", curve_input, "weighted edge-list file, or - for stdin")->required();
    curve->add_option("--kind", curve_kind, "path | dfc (default path)")
        ->check(CLI::IsMember({"path", "dfc"}));
    curve->add_option("--field", curve_field, "coefficient field (default q)");
    curve->add_flag("--reduced,!--non-reduced", curve_reduced,
                    "reduced homology (default: reduced for path, non-reduced for dfc)");
    curve->add_option("--max-dim", curve_max_dim,
                      "top degree (default: longest path; required for cyclic inputs)");
    curve->add_option("--threads", curve_threads,
                      "worker pool size (default: HOMOLOGY_THREADS or 1)");
    curve->add_option("-o,--output", curve_out, "output CSV file (default stdout)");

    try {
        app.parse(argc, argv);

        if (gen->parsed()) return run_mlp_gen(gen_widths, gen_out, gen_unit_weights);
        if (hom->parsed())
            return run_hom(hom_kind, hom_input, hom_field, hom_reduced, hom_max_dim, hom_json);
        if (verify->parsed()) {
            if (verify_random && !verify_widths.empty())
                throw std::invalid_argument("give either widths or --random, not both");
            if (!verify_random && verify_widths.empty())
                throw std::invalid_argument("verify needs layer widths or --random N");
            if (verify_random && *verify_random < 1)
                throw std::invalid_argument("--random needs a positive count");
            bool ok = verify_random
                          ? run_verify_random(*verify_random, verify_seed)
                          : verify_one_spec(MlpSpec(verify_widths), parse_fields(verify_fields));
            std::cout << (ok ? "PASS" : "FAIL") << "\n";
            return ok ? 0 : kExitVerifyFailed;
        }
        if (curve->parsed())
            return run_curve(curve_input, curve_kind, curve_field, curve_reduced, curve_max_dim,
                             curve_threads, curve_out);
        return kExitInputError;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const TooLargeForOracle& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
