// Command line front end: exact verification suites for cusp forms on the
// moduli surfaces of elliptic-curve pairs with isomorphic N-torsion.

#include "isotor/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

using namespace isotor;

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Plain JSON files addressed by a (command, params) hash.
struct Cache {
    std::string dir;

    std::filesystem::path key_path(const RunReport& probe) const {
        std::string key = probe.command + "|" + probe.inputs.dump() +
                          (probe.seed ? "|seed=" + std::to_string(*probe.seed) : "");
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(fnv1a(key)));
        return std::filesystem::path(dir) / (probe.command + "-" + buf + ".json");
    }

    bool load(const RunReport& probe, std::string& out) const {
        if (dir.empty()) return false;
        auto p = key_path(probe);
        std::ifstream in(p);
        if (!in) return false;
        out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        return !out.empty();
    }

    void store(const RunReport& report, const std::string& body) const {
        if (dir.empty()) return;
        std::filesystem::create_directories(dir);
        std::ofstream out(key_path(report));
        out << body;
    }
};

int emit(const RunReport& report, bool as_json, const Cache& cache) {
    std::string body = report.to_json().dump(2) + "\n";
    cache.store(report, body);
    if (as_json) std::cout << body;
    else std::cout << report.human();
    return report.has_fail() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isotor: exact cusp-form computations on torsion-isomorphism moduli surfaces"};
    app.require_subcommand(1);

    bool as_json = false;
    long prec = 60;
    unsigned long seed = 1;
    long max_n = kDefaultGroupBound;
    std::string cache_dir;
    if (const char* env = std::getenv("ISOTOR_MAX_N")) max_n = std::atol(env);
    app.add_flag("--json", as_json, "emit the machine readable report");
    app.add_option("--prec", prec, "q-expansion precision")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized trials")->capture_default_str();
    app.add_option("--max-N", max_n, "group enumeration bound (also ISOTOR_MAX_N)")
        ->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "directory for JSON result caching");

    long p = 7, N = 4, d = 2, n1 = 2, n2 = 2, eps = 1, trials = 1000;
    long class_index = -1;
    bool search = false;
    long search_max = 24;

    auto* c_class = app.add_subcommand("classgroup", "reduced forms and class data of Q(sqrt(-p))");
    c_class->add_option("--p", p, "prime = 3 mod 4")->required();

    auto* c_oracle = app.add_subcommand("oracle", "conductor-49 point-count coefficient series");

    auto* c_theta = app.add_subcommand("theta", "class theta sums f_I and their measured properties");
    c_theta->add_option("--p", p, "prime = 3 mod 4")->required();
    c_theta->add_option("--class-index", class_index, "restrict to one ideal class");

    auto* c_kernel = app.add_subcommand("kernel", "Hecke kernel basis and its rank");
    c_kernel->add_option("--p", p, "prime")->required();

    auto* c_verify = app.add_subcommand("verify", "run the full verification suite at one prime");
    c_verify->add_option("--p", p, "prime > 3")->required();

    auto* c_hecke = app.add_subcommand("hecke", "apply T_{n1,n2} and report the eigenvalue");
    c_hecke->add_option("--p", p, "prime")->required();
    c_hecke->add_option("--n1", n1, "first index")->required();
    c_hecke->add_option("--n2", n2, "second index")->required();

    auto* c_ktest = app.add_subcommand("kernel-test", "kernel membership scan at one eps");
    c_ktest->add_option("--p", p, "prime")->required();
    c_ktest->add_option("--eps", eps, "component label")->required();

    auto* c_hsub = app.add_subcommand("hsub", "H subgroup of the eigenform lifts");
    c_hsub->add_option("--p", p, "prime")->required();

    auto* c_level = app.add_subcommand("level-change", "normal closure vs reduction kernel");
    c_level->add_option("--N", N, "modulus");
    c_level->add_option("--d", d, "prime divisor of N");
    c_level->add_flag("--search", search, "probe the composite-level decomposition instead");
    c_level->add_option("--search-max", search_max, "bound for --search")->capture_default_str();

    auto* c_cosets = app.add_subcommand("cosets", "T_{n1,n2} coset representatives and reduction trials");
    c_cosets->add_option("--n1", n1, "first determinant")->required();
    c_cosets->add_option("--n2", n2, "second determinant")->required();
    c_cosets->add_option("--N", N, "level")->required();
    c_cosets->add_option("--trials", trials, "random reduction trials")->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    Cache cache{cache_dir};

    try {
        // Probe carries the cache key (command + inputs + seed) without computing.
        RunReport probe;
        std::function<RunReport()> run;
        if (c_class->parsed()) {
            probe.command = "classgroup";
            probe.inputs["p"] = p;
            run = [&] { return cmd_classgroup(p); };
        } else if (c_oracle->parsed()) {
            probe.command = "oracle";
            probe.inputs["prec"] = prec;
            run = [&] { return cmd_oracle(prec); };
        } else if (c_theta->parsed()) {
            probe.command = "theta";
            probe.inputs["p"] = p;
            probe.inputs["prec"] = prec;
            if (class_index >= 0) probe.inputs["class_index"] = class_index;
            run = [&] {
                return cmd_theta(p, prec,
                                 class_index >= 0 ? std::optional<long>(class_index) : std::nullopt);
            };
        } else if (c_kernel->parsed()) {
            probe.command = "kernel";
            probe.inputs["p"] = p;
            probe.inputs["prec"] = prec;
            run = [&] { return cmd_kernel(p, prec); };
        } else if (c_verify->parsed()) {
            probe.command = "verify";
            probe.inputs["p"] = p;
            probe.inputs["prec"] = prec;
            run = [&] { return cmd_verify(p, prec); };
        } else if (c_hecke->parsed()) {
            probe.command = "hecke";
            probe.inputs["p"] = p;
            probe.inputs["n1"] = n1;
            probe.inputs["n2"] = n2;
            probe.inputs["prec"] = prec;
            run = [&] { return cmd_hecke(p, n1, n2, prec); };
        } else if (c_ktest->parsed()) {
            probe.command = "kernel-test";
            probe.inputs["p"] = p;
            probe.inputs["eps"] = eps;
            probe.inputs["prec"] = prec;
            run = [&] { return cmd_kernel_test(p, eps, prec); };
        } else if (c_hsub->parsed()) {
            probe.command = "hsub";
            probe.inputs["p"] = p;
            probe.inputs["prec"] = prec;
            run = [&] { return cmd_hsub(p, prec); };
        } else if (c_level->parsed() && search) {
            probe.command = "level-change-search";
            probe.inputs["max_N"] = search_max;
            run = [&] { return cmd_level_change_search(search_max, max_n); };
        } else if (c_level->parsed()) {
            probe.command = "level-change";
            probe.inputs["N"] = N;
            probe.inputs["d"] = d;
            run = [&] { return cmd_level_change(N, d, max_n); };
        } else {
            probe.command = "cosets";
            probe.inputs["n1"] = n1;
            probe.inputs["n2"] = n2;
            probe.inputs["N"] = N;
            probe.inputs["trials"] = trials;
            probe.seed = seed;
            run = [&] { return cmd_cosets(n1, n2, N, trials, seed); };
        }

        std::string cached;
        if (as_json && cache.load(probe, cached)) {
            std::cout << cached;
            auto j = Json::parse(cached);
            for (const auto& v : j.at("verdicts"))
                if (v.at("verdict") == "FAIL") return 1;
            return 0;
        }
        return emit(run(), as_json, cache);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
