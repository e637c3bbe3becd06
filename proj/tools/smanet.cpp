#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "smanet/codegen/generate.hpp"
#include "smanet/dsl/parser.hpp"
#include "smanet/dsl/validate.hpp"
#include "smanet/error.hpp"
#include "smanet/protocol/node.hpp"
#include "smanet/sim/metrics.hpp"
#include "smanet/sim/scenario.hpp"

namespace fs = std::filesystem;
using namespace smanet;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;  // validation / configuration errors
constexpr int kIoError = 2;  // I/O or internal errors

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_diags(const std::vector<dsl::Diagnostic>& diags) {
    for (const auto& d : diags) {
        std::cerr << (d.severity == dsl::Severity::Error ? "error" : "warning")
                  << " " << d.span.line << ":" << d.span.column << " "
                  << d.message << "\n";
    }
}

// Parse + validate; returns the model or nullopt after printing diagnostics.
std::optional<dsl::SmModel> load_model(const fs::path& sm_path) {
    auto parsed = dsl::parse(read_file(sm_path));
    print_diags(parsed.diagnostics);
    if (!parsed.ok()) return std::nullopt;
    auto diags = dsl::validate(*parsed.model, dsl::ValidationMode::Permissive);
    print_diags(diags);
    if (dsl::has_errors(diags)) return std::nullopt;
    return parsed.model;
}

int cmd_validate(const std::string& sm_path) {
    return load_model(sm_path) ? kOk : kInvalid;
}

int cmd_generate(const std::string& sm_path, const std::string& resources_dir,
                 const std::string& out_dir) {
    auto model = load_model(sm_path);
    if (!model) return kInvalid;
    try {
        auto manifest = codegen::generate(*model, resources_dir, out_dir);
        for (const auto& w : manifest.warnings)
            std::cerr << "warning: " << w << "\n";
        for (const auto& f : manifest.files)
            std::cout << f.relative_path << "\n";
        return kOk;
    } catch (const MissingKeyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

struct LoadedScenario {
    sim::ScenarioConfig config;
    topic::TopicHierarchy hierarchy;
};

LoadedScenario load_scenario_checked(const fs::path& scenario_path) {
    auto config = sim::load_scenario(scenario_path);
    auto h = sim::load_scenario_hierarchy(
        config, fs::absolute(scenario_path).parent_path());
    sim::validate_scenario(config, h);
    return {std::move(config), std::move(h)};
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_json,
                 const std::string& out_csv) {
    auto [config, h] = load_scenario_checked(scenario_path);
    sim::World w = sim::run_world(config, h);
    sim::MetricsReport report = sim::compute_metrics(w, h);

    std::ofstream out(out_json, std::ios::binary);
    if (!out || !(out << sim::metrics_to_json(report)))
        throw IoError("cannot write " + out_json);
    if (!out_csv.empty()) {
        std::ofstream csv(out_csv, std::ios::binary);
        if (!csv || !(csv << sim::metrics_to_csv(report)))
            throw IoError("cannot write " + out_csv);
    }
    std::printf("pubs=%zu mean_delivery=%.3f steps=%llu\n",
                report.publications.size(), report.mean_delivery_ratio,
                static_cast<unsigned long long>(report.steps));
    return kOk;
}

int cmd_export_store(const std::string& scenario_path, sim::NodeId node_id,
                     const std::string& out_dir) {
    auto [config, h] = load_scenario_checked(scenario_path);
    bool known = false;
    for (const auto& n : config.nodes) known |= (n.id == node_id);
    if (!known) {
        std::cerr << "error: unknown node id " << node_id << "\n";
        return kInvalid;
    }
    sim::World w = sim::run_world(config, h);
    fs::create_directories(out_dir);
    for (const auto& [pid, pub] : w.node(node_id).state.store()) {
        fs::path target = fs::path(out_dir) / protocol::store_path(h, pub);
        fs::create_directories(target.parent_path());
        std::ofstream f(target, std::ios::binary);
        if (!f || !(f << pub.payload))
            throw IoError("cannot write " + target.string());
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SocialMANET DSL toolchain: validate, generate, simulate"};
    app.require_subcommand(1);

    std::string sm_path, resources_dir, out_dir, scenario_path, out_json,
        out_csv;
    sim::NodeId node_id = 0;

    auto* validate = app.add_subcommand("validate", "check a .sm source file");
    validate->add_option("file", sm_path)->required();

    auto* generate =
        app.add_subcommand("generate", "emit the resource tree for a .sm file");
    generate->add_option("file", sm_path)->required();
    generate->add_option("--resources", resources_dir, "language files folder")
        ->required();
    generate->add_option("--out", out_dir, "output folder")->required();

    auto* simulate =
        app.add_subcommand("simulate", "run a scenario and report metrics");
    simulate->add_option("file", scenario_path)->required();
    simulate->add_option("--out", out_json, "metrics JSON path")->required();
    simulate->add_option("--csv", out_csv, "optional metrics CSV path");

    auto* export_store = app.add_subcommand(
        "export-store", "run a scenario and dump one node's store");
    export_store->add_option("file", scenario_path)->required();
    export_store->add_option("--node", node_id)->required();
    export_store->add_option("--out", out_dir)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(sm_path);
        if (*generate) return cmd_generate(sm_path, resources_dir, out_dir);
        if (*simulate) return cmd_simulate(scenario_path, out_json, out_csv);
        if (*export_store)
            return cmd_export_store(scenario_path, node_id, out_dir);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }
    return kIoError;
}
