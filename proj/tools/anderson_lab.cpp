// anderson_lab: build finite Anderson Hamiltonians on torus grids, classify
// potentials as good or bad, and measure the associated probabilities.
//
// Subcommands: classify, heatmap, exact, bound, enumerate, mc, paths,
// selftest. Every command is deterministic given its flags (including
// --seed); ANDERSON_LAB_THREADS caps worker threads. Exit codes: 0 on
// success / verdict reached, 1 on usage or I/O errors, 2 for an inconclusive
// classification.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anderson/classify.hpp"
#include "anderson/grid.hpp"
#include "anderson/parallel.hpp"
#include "anderson/perturbation.hpp"
#include "anderson/probability.hpp"
#include "anderson/selftest.hpp"
#include "anderson/serialize.hpp"
#include "anderson/spectral.hpp"

namespace {

using anderson::Potential;
using anderson::PotentialDistribution;
using anderson::TorusGrid;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            dims.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw UsageError("--dims: cannot parse '" + part + "'");
        }
    }
    if (dims.empty()) throw UsageError("--dims: empty");
    return dims;
}

std::vector<double> parse_doubles(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw UsageError(flag + ": cannot parse '" + part + "'");
        }
    }
    return out;
}

PotentialDistribution parse_dist(const std::string& text) {
    const std::size_t colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (kind == "bernoulli") {
        const std::vector<double> v = parse_doubles(args, "--dist");
        if (v.size() != 1) throw UsageError("--dist bernoulli takes one parameter, e.g. bernoulli:0.5");
        return PotentialDistribution::bernoulli(v[0]);
    }
    if (kind == "uniform") {
        const std::vector<double> v = parse_doubles(args, "--dist");
        if (v.size() != 2) throw UsageError("--dist uniform takes two parameters, e.g. uniform:-1,1");
        return PotentialDistribution::uniform(v[0], v[1]);
    }
    throw UsageError("--dist: unknown kind '" + kind + "' (bernoulli:p or uniform:a,b)");
}

std::vector<double> parse_t_grid(const std::string& text) {
    std::stringstream ss(text);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
        throw UsageError("--t-grid: expected start:stop:count");
    double start = 0, stop = 0;
    long count = 0;
    try {
        start = std::stod(a);
        stop = std::stod(b);
        count = std::stol(c);
    } catch (const std::exception&) {
        throw UsageError("--t-grid: cannot parse '" + text + "'");
    }
    if (count < 1) throw UsageError("--t-grid: count must be at least 1");
    if (!(stop > start)) throw UsageError("--t-grid: stop must exceed start");
    std::vector<double> ts(count);
    for (long i = 0; i < count; ++i)
        ts[i] = count == 1 ? start : start + (stop - start) * i / (count - 1);
    return ts;
}

std::vector<double> read_potential_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open potential file: " + path);
    std::vector<double> values;
    std::string token;
    while (in >> token) {
        std::stringstream ss(token);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty()) continue;
            try {
                std::size_t used = 0;
                values.push_back(std::stod(part, &used));
                if (used != part.size()) throw std::invalid_argument(part);
            } catch (const std::exception&) {
                throw UsageError("potential file: non-numeric entry '" + part + "'");
            }
        }
    }
    return values;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + out_path);
    out << text;
    if (!out) throw UsageError("failed writing output file: " + out_path);
}

struct CommonOpts {
    std::string dims_text;
    std::string dist_text;
    std::string potential_text;
    std::string potential_file;
    std::uint64_t seed = anderson::kDefaultSeed;
    int t_samples = 3;
    double gap_tol = 0.0;    // 0 = relative default
    double entry_tol = 0.0;  // 0 = default
    std::string out_path;
    std::string format;  // json | csv; each command has one native format
};

anderson::ClassifyParams classify_params(const CommonOpts& o) {
    anderson::ClassifyParams params;
    params.t_sample_count = o.t_samples;
    params.seed = o.seed;
    if (o.gap_tol != 0.0) params.gap_tol = o.gap_tol;
    if (o.entry_tol != 0.0) params.entry_tol = o.entry_tol;
    return params;
}

Potential resolve_potential(const CommonOpts& o, const TorusGrid& grid) {
    const int sources = (!o.potential_text.empty()) + (!o.potential_file.empty()) +
                        (!o.dist_text.empty());
    if (sources == 0)
        throw UsageError("need a potential: --potential, --potential-file, or --dist with --seed");
    if (sources > 1) throw UsageError("give exactly one of --potential, --potential-file, --dist");
    if (!o.potential_text.empty())
        return anderson::explicit_potential(parse_doubles(o.potential_text, "--potential"));
    if (!o.potential_file.empty())
        return anderson::explicit_potential(read_potential_file(o.potential_file));
    return anderson::sample_potential(parse_dist(o.dist_text), grid.size(), o.seed);
}

int run(int argc, char** argv) {
    CLI::App app{"Finite Anderson models on torus grids: spectra, symmetry "
                 "certificates, good/bad classification, and probabilities"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string t_grid_text;
    double p = 0.5;
    int big_l = 0;
    std::uint64_t trials = 1000;
    std::string classifier_name = "auto";
    int max_bits = 0;
    int from_vertex = 0, to_vertex = 0;
    std::string diag_text;
    bool selftest_full = false;
    int selftest_criterion = 0;
    std::string inject_fault;

    auto add_dims = [&](CLI::App* cmd) {
        cmd->add_option("--dims", o.dims_text, "side lengths, comma separated (each > 2)")
            ->required();
    };
    auto add_out = [&](CLI::App* cmd, const std::string& native) {
        cmd->add_option("--out", o.out_path, "output file (default: stdout)");
        cmd->add_option("--format", o.format, "output format (this command: " + native + ")");
    };
    // Verdicts and estimates are structured (json); sweeps are tabular (csv).
    auto check_format = [&](const std::string& native) {
        if (o.format.empty()) o.format = native;
        if (o.format != native)
            throw UsageError("--format: this command emits " + native + " only");
    };
    auto add_tolerances = [&](CLI::App* cmd) {
        cmd->add_option("--t-samples", o.t_samples, "number of generic couplings to test");
        cmd->add_option("--gap-tol", o.gap_tol,
                        "eigenvalue gap tolerance (default: 1e-8 x spectral diameter)");
        cmd->add_option("--entry-tol", o.entry_tol,
                        "eigenvector entry tolerance (default: 1e-8)");
    };

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify one potential as good or bad");
    add_dims(classify_cmd);
    classify_cmd->add_option("--potential", o.potential_text, "comma-separated values");
    classify_cmd->add_option("--potential-file", o.potential_file, "file with values");
    classify_cmd->add_option("--dist", o.dist_text, "sample the potential: bernoulli:p | uniform:a,b");
    classify_cmd->add_option("--seed", o.seed, "seed for sampling and t draws");
    add_tolerances(classify_cmd);
    add_out(classify_cmd, "json");

    CLI::App* heatmap_cmd =
        app.add_subcommand("heatmap", "CSV of log IPR per eigenvector over a coupling grid");
    add_dims(heatmap_cmd);
    heatmap_cmd->add_option("--dist", o.dist_text, "potential distribution");
    heatmap_cmd->add_option("--potential", o.potential_text, "explicit potential");
    heatmap_cmd->add_option("--potential-file", o.potential_file, "file with values");
    heatmap_cmd->add_option("--seed", o.seed, "sampling seed");
    heatmap_cmd->add_option("--t-grid", t_grid_text, "coupling grid start:stop:count")->required();
    add_out(heatmap_cmd, "csv");

    CLI::App* exact_cmd =
        app.add_subcommand("exact", "closed-form bad probability on a prime cycle");
    exact_cmd->add_option("--L", big_l, "odd prime cycle length")->required();
    exact_cmd->add_option("--p", p, "probability of +1")->required();
    add_out(exact_cmd, "json");

    CLI::App* bound_cmd =
        app.add_subcommand("bound", "shift-symmetry lower bound for the bad probability");
    add_dims(bound_cmd);
    bound_cmd->add_option("--p", p, "probability of +1")->required();
    add_out(bound_cmd, "json");

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "classify every sign potential exhaustively");
    add_dims(enumerate_cmd);
    enumerate_cmd->add_option("--p", p, "probability of +1")->required();
    enumerate_cmd->add_option("--classifier", classifier_name,
                              "auto | exact-prime | full | numerical");
    enumerate_cmd->add_option("--max-n", max_bits, "enumeration cap override (<= 24)");
    enumerate_cmd->add_option("--seed", o.seed, "seed for the numerical sweep");
    add_tolerances(enumerate_cmd);
    add_out(enumerate_cmd, "json");

    CLI::App* mc_cmd = app.add_subcommand("mc", "Monte Carlo bad-probability estimate");
    add_dims(mc_cmd);
    mc_cmd->add_option("--dist", o.dist_text, "potential distribution")->required();
    mc_cmd->add_option("--trials", trials, "number of trials");
    mc_cmd->add_option("--seed", o.seed, "experiment seed");
    mc_cmd->add_option("--classifier", classifier_name, "auto | exact-prime | full | numerical");
    add_tolerances(mc_cmd);
    add_out(mc_cmd, "json");

    CLI::App* paths_cmd =
        app.add_subcommand("paths", "minimal paths and the perturbation path sum");
    add_dims(paths_cmd);
    paths_cmd->add_option("--diag", diag_text,
                          "diagonal entries (default: 0,1,...,n-1), must be distinct");
    paths_cmd->add_option("--from", from_vertex, "entry vertex i")->required();
    paths_cmd->add_option("--to", to_vertex, "anchor vertex k")->required();
    add_out(paths_cmd, "json");

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "run the acceptance checks at reduced scale");
    selftest_cmd->add_flag("--full", selftest_full, "full-scale acceptance run");
    selftest_cmd->add_option("--criterion", selftest_criterion, "run a single criterion (1..8)");
    selftest_cmd->add_option("--inject-fault", inject_fault,
                             "corrupt a named check to prove the selftest notices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify_cmd->parsed()) {
            check_format("json");
            const TorusGrid grid(parse_dims(o.dims_text));
            const Potential v = resolve_potential(o, grid);
            const anderson::Classification c =
                anderson::classify(grid, v, classify_params(o));
            nlohmann::json j = anderson::classification_json(grid, c);
            write_output(j.dump(2) + "\n", o.out_path);
            return c.verdict == anderson::Verdict::Inconclusive ? 2 : 0;
        }

        if (heatmap_cmd->parsed()) {
            check_format("csv");
            const TorusGrid grid(parse_dims(o.dims_text));
            const Potential v = resolve_potential(o, grid);
            const std::vector<double> ts = parse_t_grid(t_grid_text);
            write_output(anderson::heatmap_csv(anderson::ipr_heatmap(grid, v, ts)), o.out_path);
            return 0;
        }

        if (exact_cmd->parsed()) {
            check_format("json");
            const double value = anderson::exact_bad_prob_prime_cycle(big_l, p);
            nlohmann::json j{{"schema_version", anderson::kSchemaVersion},
                             {"L", big_l},
                             {"p", p},
                             {"bad_probability", value}};
            write_output(j.dump(2) + "\n", o.out_path);
            return 0;
        }

        if (bound_cmd->parsed()) {
            check_format("json");
            const std::vector<int> dims = parse_dims(o.dims_text);
            const double value = anderson::lower_bound_bad(dims, p);
            nlohmann::json j{{"schema_version", anderson::kSchemaVersion},
                             {"dims", dims},
                             {"p", p},
                             {"bad_probability_lower_bound", value}};
            write_output(j.dump(2) + "\n", o.out_path);
            return 0;
        }

        if (enumerate_cmd->parsed() || mc_cmd->parsed()) {
            check_format("json");
            const TorusGrid grid(parse_dims(o.dims_text));
            std::string chosen = classifier_name;
            if (chosen == "auto")
                chosen = (grid.dim_count() == 1 && anderson::is_odd_prime(grid.side(0)))
                             ? "exact-prime"
                             : "full";
            anderson::Classifier cls;
            if (chosen == "exact-prime")
                cls = anderson::make_exact_prime_classifier(grid);
            else if (chosen == "full")
                cls = anderson::make_full_classifier(grid, classify_params(o));
            else if (chosen == "numerical")
                cls = anderson::make_numerical_classifier(grid, classify_params(o));
            else
                throw UsageError("--classifier: unknown '" + chosen + "'");

            anderson::ProbabilityEstimate est;
            nlohmann::json params_json{{"dims", grid.dims()}, {"classifier", chosen}};
            if (enumerate_cmd->parsed()) {
                anderson::EnumerateOptions opts;
                // Classifiers that eigensolve get a smaller default cap.
                opts.max_bits = chosen == "exact-prime" ? anderson::kEnumerationMaxBits : 12;
                if (max_bits != 0)
                    opts.max_bits = std::min(max_bits, anderson::kEnumerationMaxBits);
                est = anderson::enumerate_bernoulli(grid, p, cls, opts);
                params_json["p"] = p;
            } else {
                est = anderson::monte_carlo(grid, parse_dist(o.dist_text), trials, o.seed, cls);
                params_json["dist"] = o.dist_text;
                params_json["seed"] = o.seed;
            }
            nlohmann::json j = anderson::estimate_json(est);
            j["params"] = params_json;
            write_output(j.dump(2) + "\n", o.out_path);
            return 0;
        }

        if (paths_cmd->parsed()) {
            check_format("json");
            const TorusGrid grid(parse_dims(o.dims_text));
            const anderson::SymmetricMatrix a = anderson::laplacian(grid);
            std::vector<double> diag;
            if (diag_text.empty()) {
                diag.resize(grid.size());
                for (int i = 0; i < grid.size(); ++i) diag[i] = i;
            } else {
                diag = parse_doubles(diag_text, "--diag");
            }
            if (static_cast<int>(diag.size()) != grid.size())
                throw UsageError("--diag: length does not match the grid");
            const auto paths = anderson::minimal_paths(a, from_vertex, to_vertex);
            const double sum = anderson::path_sum(diag, a, from_vertex, to_vertex);
            const double coef =
                anderson::coefficient_entry(diag, a, to_vertex, from_vertex);
            nlohmann::json j{{"schema_version", anderson::kSchemaVersion},
                             {"dims", grid.dims()},
                             {"from", from_vertex},
                             {"to", to_vertex},
                             {"distance", paths.empty() ? 0 : static_cast<int>(paths[0].size()) - 1},
                             {"paths", paths},
                             {"path_sum", sum},
                             {"propagator_power_entry", coef}};
            write_output(j.dump(2) + "\n", o.out_path);
            return 0;
        }

        if (selftest_cmd->parsed()) {
            anderson::selftest::Options opts;
            opts.reduced = !selftest_full;
            opts.criterion = selftest_criterion;
            opts.inject_fault = inject_fault;
            opts.out = &std::cout;
            const auto results = anderson::selftest::run(opts);
            return anderson::selftest::all_passed(results) ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
