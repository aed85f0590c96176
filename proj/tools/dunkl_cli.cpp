// dunkl: build Hermite bases, evaluate kernels and run the verification suite.
//
// Exit codes: 0 success, 1 a selected check failed, 2 configuration or I/O error.

#include "dunkl/config.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/kernels.hpp"
#include "dunkl/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace dunkl;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string config_file;
    std::string group;
    std::vector<double> kappa;
    std::optional<int> degree;
    std::string checks;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string cache;
    std::string basis_file;
    bool timing = false;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

RunConfig resolve(const Flags& f) {
    json j = f.config_file.empty() ? json::object() : read_json(f.config_file);
    if (!f.group.empty() || !f.kappa.empty()) {
        json rs = j.contains("root_system") ? j["root_system"] : json::object();
        if (!f.group.empty()) {
            json named = {{"type", "catalogue"}, {"name", f.group}};
            if (rs.contains("multiplicity")) named["multiplicity"] = rs["multiplicity"];
            rs = named;
        }
        if (!f.kappa.empty()) rs["multiplicity"] = f.kappa;
        if (!rs.contains("multiplicity")) rs["multiplicity"] = 0.0;
        j["root_system"] = rs;
    }
    if (f.degree) j["degree"] = *f.degree;
    if (!f.checks.empty()) j["checks"] = split(f.checks, ',');
    if (f.seed) j["seed"] = *f.seed;
    if (!f.out.empty()) j["output"]["dir"] = f.out;
    if (!f.cache.empty()) j["output"]["cache_dir"] = f.cache;
    if (f.timing) j["timing"] = true;
    if (!f.basis_file.empty()) {
        // a serialised basis fixes the root system and the degree
        const HermiteBasis b = HermiteBasis::from_json(read_json(f.basis_file));
        j["root_system"] = root_system_to_json(b.root_system());
        j["degree"] = b.degree();
    }
    return parse_run_config(j);
}

HermiteBasis obtain_basis(const RunConfig& cfg, const std::string& basis_file, bool& from_cache) {
    from_cache = false;
    if (!basis_file.empty()) {
        from_cache = true;
        return HermiteBasis::from_json(read_json(basis_file));
    }
    const RootSystem rs = root_system_from_json(cfg.root_system);
    BasisOptions opts;
    const int cap = rs.dim() == 1 ? 40 : 12;
    if (rs.is_coordinate_system() && cfg.degree > cap) opts.polynomials = false;
    const std::string mode = !opts.polynomials ? "numeric" : (rs.mode() == ArithmeticMode::Exact ? "exact" : "float128");
    const std::string key =
        fnv1a_hex(rs.fingerprint() + "|" + std::to_string(cfg.degree) + "|" + mode);
    fs::path cached;
    if (!cfg.cache_dir.empty()) {
        cached = fs::path(cfg.cache_dir) / ("basis-" + key + ".json");
        if (fs::exists(cached)) {
            from_cache = true;
            return HermiteBasis::from_json(read_json(cached.string()));
        }
    }
    HermiteBasis b = build_basis(rs, cfg.degree, opts);
    if (!cached.empty()) write_file(cached, b.to_json().dump() + "\n");
    return b;
}

void add_common(CLI::App* app, Flags& f) {
    app->add_option("--config", f.config_file, "JSON run configuration");
    app->add_option("--group", f.group, "catalogue root system: z2, z2^d, a2, b2, i2(m)");
    app->add_option("--kappa", f.kappa, "multiplicities (one value, one per orbit or one per root)")->delimiter(',');
    app->add_option("--degree", f.degree, "truncation degree N");
    app->add_option("--seed", f.seed, "random seed");
    app->add_option("--out", f.out, "output directory");
    app->add_option("--cache", f.cache, "basis cache directory");
    app->add_option("--basis", f.basis_file, "use a serialised basis instead of building one");
    app->add_flag("--timing", f.timing, "include wall times in reports");
}

int cmd_basis(const Flags& f) {
    const RunConfig cfg = resolve(f);
    bool cached = false;
    const HermiteBasis b = obtain_basis(cfg, f.basis_file, cached);
    const fs::path file = fs::path(cfg.out_dir) / "basis.json";
    write_file(file, b.to_json().dump(1) + "\n");
    std::printf("root_system %s\n", b.root_system().name().c_str());
    std::printf("gamma %.17g\n", b.gamma());
    std::printf("c_kappa %.17g\n", b.c_kappa());
    std::printf("m_kappa %.17g\n", b.m_kappa());
    std::printf("degree %d\n", b.degree());
    std::printf("dimension %zu\n", b.size());
    std::printf("file %s%s\n", file.string().c_str(), cached ? " (from cache)" : "");
    return 0;
}

std::vector<std::vector<double>> read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        bool numeric = true;
        for (const auto& cell : split(line, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (used != cell.size() && cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
            } catch (const std::exception&) {
                numeric = false;
            }
        }
        if (!numeric) {
            if (first) {
                first = false;
                continue;  // header
            }
            throw ConfigError(path + ": non-numeric row '" + line + "'");
        }
        first = false;
        rows.push_back(row);
    }
    return rows;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_eval(const Flags& f, const std::string& what, const std::string& points, int axis, const std::string& out_csv) {
    const RunConfig cfg = resolve(f);
    bool cached = false;
    const HermiteBasis b = obtain_basis(cfg, f.basis_file, cached);
    const int d = b.dim();
    const auto rows = read_points(points);
    const bool timed = what == "heat-kernel";
    const std::size_t width = (timed ? 1 : 0) + 2 * static_cast<std::size_t>(d);
    if (axis < 1 || axis > d) throw ConfigError("--axis must lie in 1.." + std::to_string(d));

    std::string csv;
    std::vector<std::string> head;
    if (timed) head.push_back("t");
    for (int j = 1; j <= d; ++j) head.push_back("x" + std::to_string(j));
    for (int j = 1; j <= d; ++j) head.push_back("y" + std::to_string(j));
    if (what == "dunkl-kernel")
        head.insert(head.end(), {"value", "exp_xy", "method", "truncation_estimate"});
    else if (what == "heat-kernel")
        head.insert(head.end(), {"value", "classical_kappa0"});
    else
        head.insert(head.end(), {"value", "error_estimate", "evaluations", "panels", "status"});
    for (std::size_t i = 0; i < head.size(); ++i) csv += (i ? "," : "") + head[i];
    csv += "\r\n";

    for (const auto& r : rows) {
        if (r.size() != width)
            throw ConfigError("points file: expected " + std::to_string(width) + " columns, found " +
                              std::to_string(r.size()));
        std::size_t o = timed ? 1 : 0;
        Point x(d), y(d);
        for (int j = 0; j < d; ++j) {
            x[j] = r[o + j];
            y[j] = r[o + d + j];
        }
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) line += (i ? "," : "") + fmt(r[i]);
        if (what == "dunkl-kernel") {
            if (b.root_system().is_coordinate_system() || b.gamma() == 0.0) {
                line += "," + fmt(dunkl_kernel(b, x, y, cfg.kernel)) + "," + fmt(std::exp(x.dot(y))) + ",series,0";
            } else {
                const auto m = dunkl_kernel_mehler(b, x, y, cfg.kernel);
                line += "," + fmt(m.value) + "," + fmt(std::exp(x.dot(y))) + ",mehler," + fmt(m.last_shell);
            }
        } else if (what == "heat-kernel") {
            const double t = r[0];
            line += "," + fmt(heat_kernel(b, t, x, y, cfg.kernel)) + "," + fmt(heat_kernel_classical(t, x, y));
        } else {
            try {
                const auto k = riesz_kernel(b, axis - 1, x, y, cfg.kernel);
                line += "," + fmt(k.value) + "," + fmt(k.error) + "," + std::to_string(k.evaluations) + "," +
                        std::to_string(k.intervals) + ",ok";
            } catch (const OrbitTooClose&) {
                line += ",,,,,orbit_too_close";
            } catch (const QuadratureNonConvergence&) {
                line += ",,,,,quadrature_nonconvergence";
            }
        }
        csv += line + "\r\n";
    }
    if (out_csv.empty() || out_csv == "-")
        std::fwrite(csv.data(), 1, csv.size(), stdout);
    else
        write_file(out_csv, csv);
    return 0;
}

int cmd_verify(const Flags& f) {
    const RunConfig cfg = resolve(f);
    VerificationReport rep;
    if (!cfg.checks.empty()) {
        bool cached = false;
        const HermiteBasis b = obtain_basis(cfg, f.basis_file, cached);
        rep = run_checks(cfg.checks, b, cfg);
    }
    json out = rep.to_json(cfg.timing);
    out["config"] = run_config_to_json(cfg);
    write_file(fs::path(cfg.out_dir) / "report.json", out.dump(2) + "\n");
    write_file(fs::path(cfg.out_dir) / "constants.csv", rep.constants_csv());
    for (const auto& r : rep.results) std::printf("%-24s %s\n", r.check.c_str(), r.status.c_str());
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dunkl-Hermite bases, kernels and Riesz-transform checks"};
    app.require_subcommand(1);
    Flags basis_f, eval_f, verify_f;

    auto* basis = app.add_subcommand("basis", "build (or load from cache) and serialise a basis");
    add_common(basis, basis_f);

    auto* eval = app.add_subcommand("eval", "evaluate a kernel on the rows of a CSV file");
    add_common(eval, eval_f);
    std::string what, points, out_csv;
    int axis = 1;
    eval->add_option("what", what, "dunkl-kernel | heat-kernel | riesz-kernel")
        ->required()
        ->check(CLI::IsMember({"dunkl-kernel", "heat-kernel", "riesz-kernel"}));
    eval->add_option("--points", points, "CSV rows: [t,] x1..xd, y1..yd")->required();
    eval->add_option("--axis", axis, "Riesz kernel index j (1-based)");
    eval->add_option("--csv", out_csv, "output CSV file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the selected checks and write report.json / constants.csv");
    add_common(verify, verify_f);
    verify->add_option("--checks", verify_f.checks, "comma-separated check names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    try {
        if (*basis) return cmd_basis(basis_f);
        if (*eval) return cmd_eval(eval_f, what, points, axis, out_csv);
        if (*verify) return cmd_verify(verify_f);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const ChecksumError& e) {
        std::fprintf(stderr, "checksum error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 2;
    } catch (const fs::filesystem_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
