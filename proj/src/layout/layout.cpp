#include "githru/layout/layout.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace githru::layout {
namespace {

struct SlotKey {
    Timestamp date;
    std::uint32_t topo;
    const std::string* id;
    std::size_t stem;
    std::size_t node;
};

struct Interval {
    std::size_t first;
    std::size_t last;
};

}  // namespace

LayoutModel compute_layout(std::span<const LayoutStem> stems) {
    LayoutModel model;

    // 1. Global slots.
    std::vector<SlotKey> keys;
    for (std::size_t s = 0; s < stems.size(); ++s)
        for (std::size_t n = 0; n < stems[s].nodes.size(); ++n) {
            const auto& node = stems[s].nodes[n];
            keys.push_back({node.date, node.topo_rank, &node.id, s, n});
        }
    std::sort(keys.begin(), keys.end(), [](const SlotKey& a, const SlotKey& b) {
        return std::tie(a.date, a.topo, *a.id) < std::tie(b.date, b.topo, *b.id);
    });
    std::vector<std::vector<std::size_t>> own_slots(stems.size());
    for (std::size_t k = 0; k < keys.size(); ++k) own_slots[keys[k].stem].push_back(k);

    // 2-4. Blocks: runs of consecutive slots within one cluster.
    struct StemBlocks {
        std::vector<std::size_t> blocks;
    };
    std::vector<StemBlocks> per_stem(stems.size());
    for (std::size_t s = 0; s < stems.size(); ++s) {
        const auto& stem = stems[s];
        std::size_t next_slot = 0;
        for (const auto& cluster : stem.clusters) {
            std::size_t ordinal = 0;
            std::optional<std::size_t> prev_slot;
            for (std::size_t member : cluster.members) {
                const auto& node = stem.nodes[member];
                const std::size_t slot = own_slots[s][next_slot++];
                if (!prev_slot || slot != *prev_slot + 1) {
                    Block b;
                    b.id = cluster.id + "-" + std::to_string(ordinal++);
                    b.cluster_id = cluster.id;
                    b.stem_name = stem.name;
                    b.first_slot = slot;
                    per_stem[s].blocks.push_back(model.blocks.size());
                    model.blocks.push_back(std::move(b));
                }
                Block& b = model.blocks.back();
                b.last_slot = slot;
                b.height += node.commit_count;
                b.has_csm_base = b.has_csm_base || node.csm_base;
                if (node.release_tag) b.release_tag = node.release_tag;
                b.node_ids.push_back(node.id);
                prev_slot = slot;
            }
        }
    }

    // Squeeze: column = rank of the block's first slot.
    std::vector<std::size_t> order(model.blocks.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return model.blocks[a].first_slot < model.blocks[b].first_slot; });
    std::vector<std::size_t> remap(model.blocks.size());
    std::vector<Block> sorted;
    sorted.reserve(model.blocks.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        remap[order[rank]] = rank;
        sorted.push_back(std::move(model.blocks[order[rank]]));
        sorted.back().column = rank;
    }
    model.blocks = std::move(sorted);
    for (auto& sb : per_stem)
        for (auto& b : sb.blocks) b = remap[b];
    model.column_count = model.blocks.size();

    // 5. Rows.
    std::vector<std::vector<Interval>> occupied(1);
    for (std::size_t s = 0; s < stems.size(); ++s) {
        if (per_stem[s].blocks.empty()) continue;
        Interval span{model.blocks[per_stem[s].blocks.front()].column, 0};
        for (std::size_t b : per_stem[s].blocks) {
            span.first = std::min(span.first, model.blocks[b].column);
            span.last = std::max(span.last, model.blocks[b].column);
        }
        std::size_t row = 0;
        if (!stems[s].is_main) {
            row = 1;
            for (; row < occupied.size(); ++row) {
                const bool clash = std::any_of(occupied[row].begin(), occupied[row].end(), [&](const Interval& iv) {
                    return iv.first <= span.last && span.first <= iv.last;
                });
                if (!clash) break;
            }
            if (row == occupied.size()) occupied.emplace_back();
        }
        occupied[row].push_back(span);
        model.row_assignments[stems[s].name] = row;
        model.strips.push_back({stems[s].name, row, span.first, span.last});
        for (std::size_t b : per_stem[s].blocks) model.blocks[b].row = row;
    }
    model.row_count = model.blocks.empty() ? 0 : occupied.size();

    // 6. Edges across gaps and release markers.
    for (std::size_t s = 0; s < stems.size(); ++s) {
        auto blocks = per_stem[s].blocks;
        std::sort(blocks.begin(), blocks.end());
        for (std::size_t k = 1; k < blocks.size(); ++k)
            if (model.blocks[blocks[k]].column >= model.blocks[blocks[k - 1]].column + 2)
                model.intra_stem_edges.emplace_back(blocks[k - 1], blocks[k]);
    }
    std::sort(model.intra_stem_edges.begin(), model.intra_stem_edges.end());
    for (const auto& b : model.blocks)
        if (b.release_tag) model.release_markers.push_back({b.column, *b.release_tag});
    return model;
}

}  // namespace githru::layout
