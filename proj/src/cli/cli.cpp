#include "githru/cli/cli.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "githru/ingest/git_log.hpp"
#include "githru/service/serialize.hpp"
#include "githru/service/server.hpp"
#include "githru/service/service.hpp"

namespace githru::cli {
namespace {

namespace fs = std::filesystem;

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out += c;
        }
    }
    return out + "'";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << text;
    if (!out.flush()) throw Error(ErrorCode::Io, "cannot write " + path);
}

std::shared_ptr<const AnalysisSnapshot> load_snapshot(const std::string& path) {
    return AnalysisSnapshot::build(read_snapshot_file(read_file(path)));
}

std::string repo_id_for(const std::string& path) {
    auto p = fs::path(path).lexically_normal();
    if (p.filename().empty()) p = p.parent_path();
    auto stem = p.stem().string();
    return stem.empty() ? std::string("repo") : stem;
}

}  // namespace

std::string run_git(const std::string& repo, const std::vector<std::string>& args) {
    const char* bin = std::getenv("GITHRU_GIT_BIN");
    std::string cmd = shell_quote(bin && *bin ? bin : "git") + " -C " + shell_quote(repo);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) throw Error(ErrorCode::Io, "cannot run git");
    std::string output;
    std::array<char, 65536> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    const int status = ::pclose(pipe);
    if (status != 0) throw Error(ErrorCode::Io, "git failed in " + repo);
    return output;
}

SnapshotInputs inputs_from_repo(const std::string& repo_id, const std::string& repo, const std::string& main_branch) {
    if (!fs::is_directory(repo)) throw Error(ErrorCode::Io, "not a directory: " + repo);
    const auto log = run_git(repo, ingest::git_log_arguments());
    const auto tags = run_git(repo, ingest::git_tag_arguments());
    return inputs_from_raw(repo_id, log, {}, tags, main_branch);
}

std::string export_graph(const AnalysisSnapshot& snap, const analytics::GraphParams& params) {
    params.validate();
    const auto graph = analytics::compute_graph(snap, params);
    return service::graph_to_json(snap, graph).dump(1) + "\n";
}

clustering::SimilarityWeights parse_weights(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::InvalidParams, "bad weight: '" + item + "'");
        }
    }
    if (values.size() != 5)
        throw Error(ErrorCode::InvalidParams, "--weights needs five values: author,date,type,file,message");
    clustering::SimilarityWeights w;
    w.author = values[0];
    w.date = values[1];
    w.type = values[2];
    w.file = values[3];
    w.message = values[4];
    return w;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"githru: git history analysis engine"};
    app.require_subcommand(1);

    std::string repo, log_path, pr_path, tags_path, main_branch = "master", stop_words_path, out_path, repo_id;
    auto* ingest = app.add_subcommand("ingest", "Build a snapshot from a repository or a log dump");
    auto* repo_opt = ingest->add_option("--repo", repo, "Repository directory (runs git)");
    auto* log_opt = ingest->add_option("--log", log_path, "Log dump in the pinned format");
    repo_opt->excludes(log_opt);
    ingest->add_option("--pr", pr_path, "Pull request dump (JSON)");
    ingest->add_option("--tags", tags_path, "Tag list: '<name> <commit>' per line");
    ingest->add_option("--main", main_branch, "Main branch name")->capture_default_str();
    ingest->add_option("--stopwords", stop_words_path, "Custom stop-word list, one word per line");
    ingest->add_option("--id", repo_id, "Repository id (default: input file or directory name)");
    ingest->add_option("--out", out_path, "Snapshot output file")->required();

    std::string snapshot_path, host = "127.0.0.1";
    int port = kDefaultPort;
    auto* serve = app.add_subcommand("serve", "Serve snapshots over HTTP");
    serve->add_option("--snapshot", snapshot_path, "Snapshot file")->required();
    serve->add_option("--port", port, "Port")->capture_default_str();
    serve->add_option("--host", host, "Bind address")->capture_default_str();

    std::string format = "json", weights;
    double threshold = 0.5;
    bool csm = true, release_split = false, non_conflict = false;
    int horizon = clustering::kDefaultDateHorizonDays;
    auto* exp = app.add_subcommand("export", "Write the graph response for a snapshot");
    exp->add_option("--snapshot", snapshot_path, "Snapshot file")->required();
    exp->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}))->capture_default_str();
    exp->add_option("--threshold", threshold, "Clustering threshold in [0,1]")->capture_default_str();
    exp->add_option("--weights", weights, "author,date,type,file,message");
    exp->add_option("--csm", csm, "Collapse squash/merge sources (true/false)")->capture_default_str();
    exp->add_flag("--release-split", release_split, "Break clusters at release tags");
    exp->add_flag("--non-conflict", non_conflict, "Enable non-conflict reordering");
    exp->add_option("--horizon", horizon, "Date similarity horizon in days")->capture_default_str();
    exp->add_option("--out", out_path, "Output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*ingest) {
            if (repo.empty() && log_path.empty()) throw Error(ErrorCode::InvalidParams, "ingest needs --repo or --log");
            const std::string id = !repo_id.empty() ? repo_id : repo_id_for(repo.empty() ? log_path : repo);
            SnapshotInputs inputs;
            if (!repo.empty()) {
                inputs = inputs_from_repo(id, repo, main_branch);
            } else {
                inputs = inputs_from_raw(id, read_file(log_path), {}, {}, main_branch);
            }
            if (!pr_path.empty()) inputs.prs = ingest::parse_pr_dump(read_file(pr_path));
            if (!tags_path.empty()) {
                auto extra = ingest::parse_tag_list(read_file(tags_path));
                inputs.tags.insert(inputs.tags.end(), extra.begin(), extra.end());
            }
            if (!stop_words_path.empty()) inputs.stop_words = ingest::StopWords::from_file(stop_words_path).words();
            if (inputs.commits.empty()) throw Error(ErrorCode::EmptyCorpus, "no commits");
            const auto snap = AnalysisSnapshot::build(std::move(inputs));
            write_file(out_path, write_snapshot_file(*snap));
            for (const auto& w : snap->warnings()) err << "warning: " << w << "\n";
            return kExitOk;
        }
        if (*serve) {
            service::Service svc;
            svc.add_snapshot(load_snapshot(snapshot_path));
            err << "serving " << snapshot_path << " on http://" << host << ":" << port << "\n";
            if (!service::serve(svc, host, port)) throw Error(ErrorCode::Io, "cannot listen on port " + std::to_string(port));
            return kExitOk;
        }
        if (*exp) {
            analytics::GraphParams params;
            params.csm = csm;
            params.clustering.threshold = threshold;
            if (!weights.empty()) params.clustering.weights = parse_weights(weights);
            params.clustering.split_by_release = release_split;
            params.clustering.non_conflict = non_conflict;
            params.clustering.date_horizon_days = horizon;
            const auto text = export_graph(*load_snapshot(snapshot_path), params);
            if (out_path.empty()) {
                out << text;
            } else {
                write_file(out_path, text);
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace githru::cli
