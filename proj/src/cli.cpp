#include "ghz/cli.hpp"

#include "ghz/density_matrix.hpp"
#include "ghz/errors.hpp"
#include "ghz/lhv.hpp"
#include "ghz/oracle.hpp"
#include "ghz/paradox.hpp"
#include "ghz/pauli.hpp"
#include "ghz/state_io.hpp"

#include <cstddef>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghz::cli {

namespace {

class UsageError : public DomainError {
public:
    using DomainError::DomainError;
};

const char kUsage[] =
    "ghzopt - three-qubit GHZ paradox toolkit\n"
    "\n"
    "usage: ghzopt <command> [options]\n"
    "\n"
    "commands:\n"
    "  report <statefile>        evaluate the logical inequality on a state (JSON)\n"
    "  decompose <statefile>     emit the 64 Pauli coefficients (CSV)\n"
    "  make-optimal --f1 X       emit the maximal-entropy state at violation f1 (JSON)\n"
    "  frontier [--points N]     emit the analytic entropy-violation frontier (CSV)\n"
    "  lhv                       enumerate all 64 deterministic LHV assignments (JSON)\n"
    "  scan [--n N] [--seed S] [--mode ginibre|frontier-perturbation] [--weight W]\n"
    "                            random-state check of the purity floor (JSON)\n"
    "  optimize --f1 X [--restarts R] [--seed S] [--max-iterations I]\n"
    "           [--penalty W] [--tolerance T] [--warm-start]\n"
    "                            constrained purity minimization at fixed f1 (JSON)\n"
    "  frontier-verify --grid a,b,c [--restarts R] [--seed S] [--warm-start]\n"
    "                            optimizer vs analytic frontier (CSV)\n"
    "\n"
    "every emitting command accepts --out <path>; --help prints this text\n";

struct Options {
    std::vector<std::string> positionals;
    std::map<std::string, std::string> values;
    std::set<std::string> flags;
};

Options parse_options(const std::vector<std::string>& args, std::size_t first,
                      std::size_t max_positionals,
                      const std::set<std::string>& value_names,
                      const std::set<std::string>& flag_names) {
    Options opts;
    for (std::size_t i = first; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg.rfind("--", 0) == 0) {
            const std::string name = arg.substr(2);
            if (flag_names.count(name)) {
                opts.flags.insert(name);
            } else if (value_names.count(name)) {
                if (i + 1 >= args.size()) {
                    throw UsageError("option --" + name + " needs a value");
                }
                opts.values[name] = args[++i];
            } else {
                throw UsageError("unknown option --" + name);
            }
        } else {
            if (opts.positionals.size() >= max_positionals) {
                throw UsageError("unexpected argument: " + arg);
            }
            opts.positionals.push_back(arg);
        }
    }
    return opts;
}

double parse_double(const std::string& name, const std::string& text) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("option --" + name + " expects a number, got \"" + text + "\"");
    }
    if (pos != text.size()) {
        throw UsageError("option --" + name + " expects a number, got \"" + text + "\"");
    }
    return value;
}

long long parse_integer(const std::string& name, const std::string& text) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("option --" + name + " expects an integer, got \"" + text + "\"");
    }
    if (pos != text.size()) {
        throw UsageError("option --" + name + " expects an integer, got \"" + text + "\"");
    }
    return value;
}

void emit(const std::string& text, const Options& opts, std::ostream& out) {
    auto it = opts.values.find("out");
    if (it == opts.values.end()) {
        out << text;
        return;
    }
    std::ofstream file(it->second, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file: " + it->second);
    }
    file << text;
    if (!file) {
        throw std::runtime_error("failed writing output file: " + it->second);
    }
}

DensityMatrix read_paradox_state(const std::string& path) {
    DensityMatrix rho = read_state_file(path);
    if (rho.dim() != 8) {
        throw ParseError("state file has dim " + std::to_string(rho.dim()) +
                         "; paradox commands expect dim 8");
    }
    return rho;
}

std::string report_json(const ParadoxReport& report) {
    std::ostringstream out;
    out << "{\"q\": [" << format_double(report.q[0]) << ", " << format_double(report.q[1])
        << ", " << format_double(report.q[2]) << ", " << format_double(report.q[3])
        << "], \"inequality_value\": " << format_double(report.inequality_value)
        << ", \"f1\": " << format_double(report.f1)
        << ", \"violated\": " << (report.violated ? "true" : "false") << "}\n";
    return out.str();
}

int cmd_report(const std::vector<std::string>& args, std::ostream& out) {
    const Options opts = parse_options(args, 1, 1, {"out"}, {});
    if (opts.positionals.empty()) {
        throw UsageError("report: missing state file argument");
    }
    const DensityMatrix rho = read_paradox_state(opts.positionals[0]);
    emit(report_json(paradox_report(rho)), opts, out);
    return 0;
}

int cmd_decompose(const std::vector<std::string>& args, std::ostream& out) {
    const Options opts = parse_options(args, 1, 1, {"out"}, {});
    if (opts.positionals.empty()) {
        throw UsageError("decompose: missing state file argument");
    }
    const DensityMatrix rho = read_paradox_state(opts.positionals[0]);
    const PauliCoefficients coeffs = decompose(rho);

    std::ostringstream csv;
    csv << "r,s,t,p\n";
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
            for (int t = 0; t < 4; ++t) {
                csv << r << ',' << s << ',' << t << ','
                    << format_double(coeffs.at(PauliIndex{r, s, t})) << '\n';
            }
        }
    }
    emit(csv.str(), opts, out);
    return 0;
}

int cmd_make_optimal(const std::vector<std::string>& args, std::ostream& out) {
    const Options opts = parse_options(args, 1, 0, {"f1", "out"}, {});
    auto it = opts.values.find("f1");
    if (it == opts.values.end()) {
        throw UsageError("make-optimal: --f1 is required");
    }
    const double f1 = parse_double("f1", it->second);
    emit(state_to_json(optimal_state(f1).matrix()), opts, out);
    return 0;
}

int cmd_frontier(const std::vector<std::string>& args, std::ostream& out) {
    const Options opts = parse_options(args, 1, 0, {"points", "out"}, {});
    long long points = 101;
    if (auto it = opts.values.find("points"); it != opts.values.end()) {
        points = parse_integer("points", it->second);
    }
    if (points < 2) {
        throw DomainError("frontier: --points must be at least 2");
    }

    std::ostringstream csv;
    csv << "f1,violation,linear_entropy,purity_floor\n";
    for (long long i = 0; i < points; ++i) {
        const double f1 = 0.5 * static_cast<double>(i) / static_cast<double>(points - 1);
        const FrontierPoint point = frontier_point(f1);
        csv << format_double(point.f1) << ',' << format_double(point.violation) << ','
            << format_double(point.entropy) << ',' << format_double(point.purity_floor)
            << '\n';
    }
    emit(csv.str(), opts, out);
    return 0;
}

int cmd_lhv(const std::vector<std::string>& args, std::ostream& out) {
    const Options opts = parse_options(args, 1, 0, {"out"}, {});
    const LhvReport report = enumerate_all();

    std::ostringstream json;
    json << "{\"max_satisfied\": " << report.max_satisfied << ", \"histogram\": {";
    bool first = true;
    for (const auto& [count, assignments] : report.histogram) {
        json << (first ? "" : ", ") << '"' << count << "\": " << assignments;
        first = false;
    }
    json << "}, \"classical_min_inequality_value\": "
         << format_double(report.classical_min_inequality_value) << "}\n";
    emit(json.str(), opts, out);
    return 0;
}

int cmd_scan(const std::vector<std::string>& args, std::ostream& out) {
    const Options opts =
        parse_options(args, 1, 0, {"n", "seed", "mode", "weight", "out"}, {});
    SampleConfig config;
    config.count = 1000;
    config.seed = 1;
    config.mode = SampleMode::ginibre;
    config.perturbation_weight = 0.3;

    if (auto it = opts.values.find("n"); it != opts.values.end()) {
        const long long n = parse_integer("n", it->second);
        if (n < 1) {
            throw DomainError("scan: --n must be at least 1");
        }
        config.count = static_cast<std::size_t>(n);
    }
    if (auto it = opts.values.find("seed"); it != opts.values.end()) {
        config.seed = static_cast<std::uint64_t>(parse_integer("seed", it->second));
    }
    if (auto it = opts.values.find("mode"); it != opts.values.end()) {
        if (it->second == "ginibre") {
            config.mode = SampleMode::ginibre;
        } else if (it->second == "frontier-perturbation") {
            config.mode = SampleMode::frontier_perturbation;
        } else {
            throw UsageError("scan: --mode must be ginibre or frontier-perturbation");
        }
    }
    if (auto it = opts.values.find("weight"); it != opts.values.end()) {
        config.perturbation_weight = parse_double("weight", it->second);
        if (!(config.perturbation_weight >= 0.0 && config.perturbation_weight <= 1.0)) {
            throw DomainError("scan: --weight must be in [0, 1]");
        }
    }

    const ScanReport report = purity_bound_scan(config);
    std::ostringstream json;
    json << "{\"checked\": " << report.checked << ", \"violations\": " << report.violations
         << ", \"worst_margin\": " << format_double(report.worst_margin) << "}\n";
    emit(json.str(), opts, out);
    return 0;
}

OptimizerOptions optimizer_options_from(const Options& opts) {
    OptimizerOptions options;
    if (auto it = opts.values.find("restarts"); it != opts.values.end()) {
        const long long restarts = parse_integer("restarts", it->second);
        if (restarts < 1) {
            throw DomainError("--restarts must be at least 1");
        }
        options.restarts = static_cast<int>(restarts);
    }
    if (auto it = opts.values.find("seed"); it != opts.values.end()) {
        options.seed = static_cast<std::uint64_t>(parse_integer("seed", it->second));
    }
    if (auto it = opts.values.find("max-iterations"); it != opts.values.end()) {
        const long long iters = parse_integer("max-iterations", it->second);
        if (iters < 1) {
            throw DomainError("--max-iterations must be at least 1");
        }
        options.max_iterations = static_cast<int>(iters);
    }
    if (auto it = opts.values.find("penalty"); it != opts.values.end()) {
        options.penalty_weight = parse_double("penalty", it->second);
        if (!(options.penalty_weight > 0.0)) {
            throw DomainError("--penalty must be positive");
        }
    }
    if (auto it = opts.values.find("tolerance"); it != opts.values.end()) {
        options.tolerance = parse_double("tolerance", it->second);
        if (!(options.tolerance > 0.0)) {
            throw DomainError("--tolerance must be positive");
        }
    }
    options.warm_start = opts.flags.count("warm-start") > 0;
    return options;
}

std::string optimization_json(const OptimizationResult& result) {
    std::ostringstream json;
    json << "{\"target_f1\": " << format_double(result.target_f1)
         << ", \"achieved_f1\": " << format_double(result.achieved_f1)
         << ", \"achieved_purity\": " << format_double(result.achieved_purity)
         << ", \"analytic_floor\": " << format_double(result.analytic_floor)
         << ", \"gap\": " << format_double(result.gap)
         << ", \"iterations\": " << result.iterations
         << ", \"converged\": " << (result.converged ? "true" : "false") << "}\n";
    return json.str();
}

int cmd_optimize(const std::vector<std::string>& args, std::ostream& out) {
    const Options opts = parse_options(
        args, 1, 0,
        {"f1", "restarts", "seed", "max-iterations", "penalty", "tolerance", "out"},
        {"warm-start"});
    auto it = opts.values.find("f1");
    if (it == opts.values.end()) {
        throw UsageError("optimize: --f1 is required");
    }
    const double f1 = parse_double("f1", it->second);
    const OptimizationResult result = minimize_purity_at_f1(f1, optimizer_options_from(opts));
    emit(optimization_json(result), opts, out);
    return 0;
}

int cmd_frontier_verify(const std::vector<std::string>& args, std::ostream& out) {
    const Options opts = parse_options(
        args, 1, 0,
        {"grid", "restarts", "seed", "max-iterations", "penalty", "tolerance", "out"},
        {"warm-start"});
    auto it = opts.values.find("grid");
    if (it == opts.values.end()) {
        throw UsageError("frontier-verify: --grid is required");
    }
    std::vector<double> grid;
    std::stringstream parts(it->second);
    std::string part;
    while (std::getline(parts, part, ',')) {
        grid.push_back(parse_double("grid", part));
    }
    if (grid.empty()) {
        throw UsageError("frontier-verify: --grid must list at least one f1 value");
    }

    const auto rows = frontier_scan(grid, optimizer_options_from(opts));
    std::ostringstream csv;
    csv << "f1,analytic_floor,achieved_purity,gap,converged\n";
    for (const auto& [analytic, numeric] : rows) {
        csv << format_double(analytic.f1) << ',' << format_double(analytic.purity_floor)
            << ',' << format_double(numeric.achieved_purity) << ','
            << format_double(numeric.gap) << ','
            << (numeric.converged ? "true" : "false") << '\n';
    }
    emit(csv.str(), opts, out);
    return 0;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return 3;
    }
    const std::string& command = args[0];
    if (command == "--help" || command == "-h" || command == "help") {
        out << kUsage;
        return 0;
    }
    if (command == "report") {
        return cmd_report(args, out);
    }
    if (command == "decompose") {
        return cmd_decompose(args, out);
    }
    if (command == "make-optimal") {
        return cmd_make_optimal(args, out);
    }
    if (command == "frontier") {
        return cmd_frontier(args, out);
    }
    if (command == "lhv") {
        return cmd_lhv(args, out);
    }
    if (command == "scan") {
        return cmd_scan(args, out);
    }
    if (command == "optimize") {
        return cmd_optimize(args, out);
    }
    if (command == "frontier-verify") {
        return cmd_frontier_verify(args, out);
    }
    throw UsageError("unknown command: " + command);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        err << "error: state fails the " << e.check() << " check: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << kUsage;
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace ghz::cli
