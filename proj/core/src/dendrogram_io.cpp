#include "shachom/dendrogram_io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <string>

#include "shachom/error.hpp"
#include "json_writer.hpp"

namespace shachom {

std::string dendrogram_to_json(const Dendrogram& dg, const std::string& config_json) {
    using detail::format_double;
    std::string out;
    out.reserve(128 + dg.records.size() * 160);
    out += "{\n";
    out += "  \"schema\": \"shachom.dendrogram/1\",\n";
    out += "  \"config\": " + config_json + ",\n";
    out += "  \"n_leaves\": " + std::to_string(dg.n_leaves) + ",\n";
    out += "  \"final_k\": " + std::to_string(dg.final_k) + ",\n";
    out += "  \"records\": [";
    for (std::size_t r = 0; r < dg.records.size(); ++r) {
        const MergeRecord& rec = dg.records[r];
        out += (r == 0 ? "\n" : ",\n");
        out += "    {\"step\": " + std::to_string(rec.step);
        out += ", \"left\": " + std::to_string(rec.left);
        out += ", \"right\": " + std::to_string(rec.right);
        out += ", \"new_id\": " + std::to_string(rec.new_id);
        out += ", \"distance\": " + format_double(rec.distance);
        out += ", \"occ\": " + std::to_string(rec.occ);
        out += ", \"resolved_by\": \"" + std::string(to_string(rec.resolved_by)) + "\"";
        if (rec.hc_value)
            out += ", \"hc_value\": " + format_double(*rec.hc_value);
        out += "}";
    }
    out += dg.records.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

void write_dendrogram_json(const Dendrogram& dg, const std::filesystem::path& path,
                           const std::string& config_json) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << dendrogram_to_json(dg, config_json);
    if (!out)
        throw IoError("write failed for '" + path.string() + "'");
}

std::string dendrogram_to_newick(const Dendrogram& dg) {
    // height of a node: 0 for leaves, merge distance for internal nodes
    std::map<ClusterId, const MergeRecord*> internal;
    std::map<ClusterId, bool> is_root;
    for (std::size_t i = 0; i < dg.n_leaves; ++i)
        is_root[static_cast<ClusterId>(i)] = true;
    for (const MergeRecord& rec : dg.records) {
        internal[rec.new_id] = &rec;
        is_root[rec.new_id] = true;
        is_root[rec.left] = false;
        is_root[rec.right] = false;
    }

    const auto height_of = [&](ClusterId id) -> double {
        const auto it = internal.find(id);
        return it == internal.end() ? 0.0 : it->second->distance;
    };

    std::function<void(ClusterId, double, std::string&)> emit =
        [&](ClusterId id, double parent_height, std::string& out) {
            const auto it = internal.find(id);
            if (it == internal.end()) {
                out += std::to_string(id);
            } else {
                const MergeRecord& rec = *it->second;
                out += '(';
                emit(rec.left, rec.distance, out);
                out += ',';
                emit(rec.right, rec.distance, out);
                out += ')';
            }
            out += ':';
            out += detail::format_double(parent_height - height_of(id));
        };

    std::vector<ClusterId> roots;
    for (const auto& [id, root] : is_root)
        if (root)
            roots.push_back(id);

    std::string out;
    if (roots.size() == 1) {
        const auto it = internal.find(roots[0]);
        if (it == internal.end()) {
            out = std::to_string(roots[0]);
        } else {
            const MergeRecord& rec = *it->second;
            out += '(';
            emit(rec.left, rec.distance, out);
            out += ',';
            emit(rec.right, rec.distance, out);
            out += ')';
        }
    } else {
        // final_k > 1: join the remaining roots under a zero-length virtual root
        double top = 0.0;
        for (const ClusterId r : roots)
            top = std::max(top, height_of(r));
        out += '(';
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (i > 0)
                out += ',';
            emit(roots[i], top, out);
        }
        out += ')';
    }
    out += ";\n";
    return out;
}

void write_newick(const Dendrogram& dg, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << dendrogram_to_newick(dg);
    if (!out)
        throw IoError("write failed for '" + path.string() + "'");
}

} // namespace shachom
