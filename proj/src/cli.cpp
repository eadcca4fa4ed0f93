#include "commgraph/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commgraph/classify.hpp"
#include "commgraph/commuting_graph.hpp"
#include "commgraph/error.hpp"
#include "commgraph/group_io.hpp"
#include "commgraph/paperfam.hpp"

namespace commgraph::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::vector<std::string> inputs;
    std::uint64_t q = family::kBaseParams.q;
    std::uint64_t r = family::kBaseParams.r;
    std::uint64_t t = family::kBaseParams.t;
    std::uint64_t q_max = 0;
    std::size_t cap = grp::kDefaultElementCap;
    std::string out_path;
    std::string format = "json";
    unsigned jobs = 1;
};

int exit_code_for(const Error& e)
{
    return e.code() == ErrorCode::CapExceeded ? kCapExceeded : kInputError;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string csv_value(const json& row, const std::string& key)
{
    if (!row.contains(key) || row[key].is_null()) return "";
    if (row[key].is_string()) return csv_field(row[key].get<std::string>());
    return csv_field(row[key].dump());
}

std::string to_csv(const std::vector<std::string>& columns, const json& rows)
{
    std::ostringstream s;
    for (std::size_t i = 0; i < columns.size(); ++i) s << (i ? "," : "") << columns[i];
    s << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) s << (i ? "," : "") << csv_value(row, columns[i]);
        s << "\n";
    }
    return s.str();
}

struct FileResult {
    json report;
    int code = kOk;
};

FileResult analyze_one(const std::string& path, const RunConfig& cfg, unsigned graph_jobs)
{
    FileResult res;
    try {
        const grp::GroupPtr g = grp::load_group_file(path, cfg.cap);
        const auto verdict = classify::classify_group(g, graph_jobs);
        res.report = classify::to_json(verdict);
        if (verdict.kind == classify::VerdictKind::DisconnectedOther) res.code = kSentinel;
    } catch (const Error& e) {
        res.report = {{"error", e.what()}};
        res.code = exit_code_for(e);
    }
    res.report["file"] = path;
    return res;
}

class Runner {
public:
    Runner(RunConfig cfg, std::ostream& out, std::ostream& err) : cfg_(std::move(cfg)), out_(out), err_(err) {}

    int analyze()
    {
        const std::size_t n = cfg_.inputs.size();
        const unsigned jobs = std::max(1u, cfg_.jobs);
        const unsigned graph_jobs = n == 1 ? jobs : 1;
        std::vector<FileResult> results(n);
        // Fixed-size batches; results land in input order.
        for (std::size_t start = 0; start < n; start += jobs) {
            std::vector<std::future<FileResult>> batch;
            for (std::size_t i = start; i < std::min(n, start + jobs); ++i) {
                batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, analyze_one,
                                           cfg_.inputs[i], std::cref(cfg_), graph_jobs));
            }
            for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
        }

        int code = kOk;
        json rows = json::array();
        for (const auto& r : results) {
            code = std::max(code, r.code);
            if (r.report.contains("error")) err_ << r.report["file"].get<std::string>() << ": " << r.report["error"].get<std::string>() << "\n";
            rows.push_back(r.report);
        }
        if (cfg_.format == "csv") {
            emit(to_csv({"file", "kind", "order", "kernel_order", "K_order", "L_order", "components", "diameter",
                         "quotient_metacyclic", "error"},
                        rows));
        } else {
            emit((n == 1 ? rows[0] : rows).dump(2) + "\n");
        }
        return code;
    }

    int paper_verify()
    {
        const family::ParamTriple p{cfg_.q, cfg_.r, cfg_.t};
        if (auto why = family::params_problem(p); !why.empty()) {
            err_ << "invalid parameters (" << p.q << "," << p.r << "," << p.t << "): " << why << "\n";
            return kInputError;
        }
        const family::PaperReport report = family::run_paper_checks(p);
        const json j = family::to_json(report);
        if (cfg_.format == "csv") {
            emit(to_csv({"name", "status", "detail"}, j["checks"]));
        } else {
            emit(j.dump(2) + "\n");
        }
        if (const auto* fail = report.first_failure()) {
            err_ << "check failed: " << fail->name << ": " << fail->detail << "\n";
            return kCheckFailed;
        }
        return kOk;
    }

    int search_params()
    {
        if (cfg_.q_max < 3) {
            err_ << "--q-max must be at least 3\n";
            return kInputError;
        }
        json rows = json::array();
        for (const auto& p : family::find_params(cfg_.q_max)) rows.push_back(family::to_json(p));
        if (cfg_.format == "csv") {
            emit(to_csv({"q", "r", "t"}, rows));
        } else {
            emit(rows.dump(2) + "\n");
        }
        return kOk;
    }

    int graph_export()
    {
        const std::string& path = cfg_.inputs.front();
        json j;
        try {
            const grp::GroupPtr g = grp::load_group_file(path, cfg_.cap);
            if (grp::is_abelian(g)) {
                j = {{"classes", json::array()}, {"edges", json::array()}, {"components", 0}, {"diameter", nullptr}};
            } else {
                const auto graph = graph::CommutingGraph::build(g);
                j = graph::export_json(graph, graph::diameter_and_components(graph, std::max(1u, cfg_.jobs)));
            }
        } catch (const Error& e) {
            err_ << path << ": " << e.what() << "\n";
            return exit_code_for(e);
        }
        if (cfg_.format == "csv") {
            json rows = json::array();
            for (std::size_t i = 0; i < j["classes"].size(); ++i) {
                rows.push_back({{"class", i}, {"size", j["classes"][i]["size"]}, {"rep", j["classes"][i]["rep"].dump()}});
            }
            emit(to_csv({"class", "size", "rep"}, rows));
        } else {
            emit(j.dump(2) + "\n");
        }
        return kOk;
    }

private:
    void emit(const std::string& text)
    {
        if (cfg_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(cfg_.out_path, std::ios::binary);
        if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + cfg_.out_path);
        f << text;
    }

    RunConfig cfg_;
    std::ostream& out_;
    std::ostream& err_;
};

std::size_t default_cap()
{
    if (const char* env = std::getenv(kCapEnv)) {
        try {
            const auto v = std::stoull(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return grp::kDefaultElementCap;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    cfg.cap = default_cap();

    CLI::App app{"Commuting graphs of finite groups"};
    app.require_subcommand(1);
    app.add_option("--cap", cfg.cap, "Element cap for group enumeration")->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out_path, "Write the report to this file");
    app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", cfg.jobs, "Parallelism degree")->check(CLI::PositiveNumber);

    auto* analyze = app.add_subcommand("analyze", "Classify groups and analyse their commuting graphs");
    analyze->add_option("files", cfg.inputs, "Group files")->required();
    auto* verify = app.add_subcommand("paper-verify", "Verify the diameter-8 construction");
    verify->add_option("--q", cfg.q);
    verify->add_option("--r", cfg.r);
    verify->add_option("--t", cfg.t);
    auto* search = app.add_subcommand("search-params", "List admissible (q, r, t)");
    search->add_option("--q-max", cfg.q_max)->required();
    auto* gexport = app.add_subcommand("graph-export", "Export the commuting graph class quotient");
    gexport->add_option("file", cfg.inputs, "Group file")->required()->expected(1);

    // Options are accepted before or after the subcommand name.
    for (auto* sub : {analyze, verify, search, gexport}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }

    Runner runner(cfg, out, err);
    try {
        if (*analyze) return runner.analyze();
        if (*verify) return runner.paper_verify();
        if (*search) return runner.search_params();
        return runner.graph_export();
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace commgraph::cli
