#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "githru/analytics/graph.hpp"
#include "githru/snapshot.hpp"

namespace githru::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kDefaultPort = 8787;

/// Runs `git <args>` inside `repo` and returns its standard output. The
/// executable is taken from GITHRU_GIT_BIN when set. Throws Error(Io).
std::string run_git(const std::string& repo, const std::vector<std::string>& args);

/// Raw inputs read from a repository through git.
SnapshotInputs inputs_from_repo(const std::string& repo_id, const std::string& repo, const std::string& main_branch);

/// Offline graph response for a snapshot, as written by `export`.
std::string export_graph(const AnalysisSnapshot& snap, const analytics::GraphParams& params);

/// Parses "a,d,t,f,m" into clustering weights. Throws Error(InvalidParams).
clustering::SimilarityWeights parse_weights(const std::string& text);

/// Entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace githru::cli
