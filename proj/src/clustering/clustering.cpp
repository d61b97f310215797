#include "githru/clustering/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "githru/error.hpp"

namespace githru::clustering {

void ClusterParams::validate() const {
    if (!std::isfinite(threshold) || threshold < 0.0 || threshold > 1.0)
        throw Error(ErrorCode::InvalidParams, "threshold must lie in [0, 1]");
    if (date_horizon_days <= 0) throw Error(ErrorCode::InvalidParams, "date horizon must be positive");
    (void)weights.normalized();
}

std::string cluster_id(std::string_view stem_name, std::string_view first_member_id) {
    // FNV-1a, 64 bit.
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    mix(stem_name);
    mix(std::string_view("\0", 1));
    mix(first_member_id);
    char buf[24];
    std::snprintf(buf, sizeof buf, "c%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

Cluster open_cluster(std::string_view stem_name, const ClusterNode& node, std::size_t position) {
    Cluster c;
    c.id = cluster_id(stem_name, node.id);
    c.stem_name = std::string(stem_name);
    c.members.push_back(position);
    c.aggregate = node.features;
    c.commit_count = node.commit_count;
    c.cloc = node.cloc;
    c.type_counts = node.type_counts;
    c.release_tag = node.release_tag;
    return c;
}

void absorb(Cluster& into, const Cluster& from) {
    merge_aggregate(into.aggregate, into.members.size(), from.aggregate, from.members.size());
    into.members.insert(into.members.end(), from.members.begin(), from.members.end());
    into.commit_count += from.commit_count;
    into.cloc += from.cloc;
    for (std::size_t t = 0; t < into.type_counts.size(); ++t) into.type_counts[t] += from.type_counts[t];
    if (from.release_tag) into.release_tag = from.release_tag;
}

bool intersects(const LabelSet& a, const LabelSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

}  // namespace

std::vector<Cluster> cluster_stem(std::string_view stem_name, std::span<const ClusterNode> nodes,
                                  const ClusterParams& params) {
    params.validate();
    const SimilarityWeights weights = params.weights.normalized();

    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Cluster single = open_cluster(stem_name, nodes[i], i);
        if (!clusters.empty()) {
            Cluster& current = clusters.back();
            const bool closed = params.split_by_release && current.release_tag.has_value();
            const double difference =
                1.0 - similarity(current.aggregate, single.aggregate, weights, params.date_horizon_days);
            if (!closed && difference <= params.threshold) {
                absorb(current, single);
                continue;
            }
        }
        clusters.push_back(std::move(single));
    }
    return clusters;
}

std::vector<Cluster> non_conflict_cluster(std::vector<Cluster> clusters, const ClusterParams& params) {
    params.validate();
    const SimilarityWeights weights = params.weights.normalized();

    for (std::size_t a = 0; a < clusters.size(); ++a) {
        std::size_t c = a + 2;
        while (c < clusters.size()) {
            Cluster& anchor = clusters[a];
            if (params.split_by_release && anchor.release_tag) break;

            bool blocked = false;
            for (std::size_t b = a + 1; b < c && !blocked; ++b) {
                blocked = intersects(anchor.aggregate.files, clusters[b].aggregate.files) ||
                          (params.split_by_release && clusters[b].release_tag.has_value());
            }
            // The anchor's file set only grows, so a blocker stays a blocker.
            if (blocked) break;

            bool jumps_conflict = false;
            for (std::size_t b = a + 1; b < c && !jumps_conflict; ++b)
                jumps_conflict = intersects(clusters[c].aggregate.files, clusters[b].aggregate.files);

            const double difference =
                1.0 - similarity(anchor.aggregate, clusters[c].aggregate, weights, params.date_horizon_days);
            if (!jumps_conflict && difference <= params.threshold) {
                absorb(anchor, clusters[c]);
                clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(c));
            } else {
                ++c;
            }
        }
    }
    return clusters;
}

}  // namespace githru::clustering
