#include "shachom/config.hpp"

#include <algorithm>
#include <array>

#include "shachom/error.hpp"
#include "shachom/homogeneity.hpp"
#include "json_writer.hpp"

namespace shachom {

void validate(const RunConfig& cfg) {
    if (cfg.input_path.empty())
        throw ValidationError("input path is required");
    if (cfg.k < 1)
        throw ValidationError("k must be at least 1");
    if (cfg.alpha.empty())
        throw ValidationError("alpha is required");
    // The length check against the attribute count happens at load time; the
    // value ranges are checked now so a bad alpha fails before any computation.
    parse_alpha_values(cfg.alpha);
    if (cfg.tie_eps < 0.0)
        throw ValidationError("tie-eps must be non-negative");
    if (!(cfg.split_ratio > 0.0 && cfg.split_ratio < 1.0))
        throw ValidationError("split-ratio must lie in (0, 1)");
    if (cfg.n_bins < 2)
        throw ValidationError("bins must be at least 2");
    if (cfg.output_dir.empty())
        throw ValidationError("output directory is required");
}

std::string config_to_json(const RunConfig& cfg) {
    using detail::format_double;
    using detail::json_str;
    std::string out = "{";
    out += "\"input\": " + json_str(cfg.input_path);
    out += ", \"k\": " + std::to_string(cfg.k);
    out += ", \"alpha\": " + json_str(cfg.alpha);
    out += ", \"tie_eps\": " + format_double(cfg.tie_eps);
    out += ", \"split_ratio\": " + format_double(cfg.split_ratio);
    out += ", \"seed\": " + std::to_string(cfg.seed);
    out += ", \"bins\": " + std::to_string(cfg.n_bins);
    out += ", \"out\": " + json_str(cfg.output_dir);
    out += ", \"has_header\": ";
    out += cfg.has_header ? "true" : "false";
    out += ", \"label_column\": ";
    out += cfg.label_column ? std::to_string(*cfg.label_column) : "null";
    out += ", \"drop_attributes\": " + std::to_string(cfg.drop_attributes);
    out += ", \"drop_instances\": " + std::to_string(cfg.drop_instances);
    out += ", \"stratify\": ";
    out += cfg.stratify ? "true" : "false";
    out += ", \"newick\": ";
    out += cfg.write_newick ? "true" : "false";
    out += "}";
    return out;
}

namespace {

constexpr std::array<std::string_view, 4> kGridKeys = {"k", "alpha", "drop_attributes",
                                                       "drop_instances"};

std::vector<std::string> split_values(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t pos = s.find(',', start);
        if (pos == std::string::npos)
            pos = s.size();
        std::string v = s.substr(start, pos - start);
        while (!v.empty() && v.front() == ' ')
            v.erase(v.begin());
        while (!v.empty() && v.back() == ' ')
            v.pop_back();
        if (v.empty())
            throw ValidationError("grid value list contains an empty entry");
        out.push_back(std::move(v));
        start = pos + 1;
    }
    return out;
}

} // namespace

std::vector<SweepAxis> parse_grid(const std::string& spec) {
    std::vector<SweepAxis> axes;
    if (spec.empty())
        return axes;

    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t pos = spec.find(';', start);
        if (pos == std::string::npos)
            pos = spec.size();
        const std::string part = spec.substr(start, pos - start);
        start = pos + 1;
        if (part.empty())
            continue;

        const std::size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw ValidationError("grid axis '" + part + "' is not of the form key=v1,v2");
        std::string key = part.substr(0, eq);
        key.erase(std::remove(key.begin(), key.end(), ' '), key.end());
        if (std::find(kGridKeys.begin(), kGridKeys.end(), key) == kGridKeys.end())
            throw ValidationError("unknown grid key '" + key +
                                  "' (expected k, alpha, drop_attributes, drop_instances)");
        if (std::any_of(axes.begin(), axes.end(),
                        [&](const SweepAxis& a) { return a.key == key; }))
            throw ValidationError("grid key '" + key + "' given twice");
        axes.push_back(SweepAxis{std::move(key), split_values(part.substr(eq + 1))});
    }

    // normalize axis order: k, alpha, drop_attributes, drop_instances
    std::stable_sort(axes.begin(), axes.end(), [](const SweepAxis& a, const SweepAxis& b) {
        const auto rank = [](const std::string& k) {
            return std::find(kGridKeys.begin(), kGridKeys.end(), k) - kGridKeys.begin();
        };
        return rank(a.key) < rank(b.key);
    });
    return axes;
}

namespace {

std::size_t parse_count(const std::string& key, const std::string& v) {
    std::size_t out = 0;
    std::size_t pos = 0;
    try {
        out = std::stoull(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != v.size())
        throw ValidationError("grid value '" + v + "' for " + key + " is not a count");
    return out;
}

void apply_value(RunConfig& cfg, const std::string& key, const std::string& v) {
    if (key == "k")
        cfg.k = parse_count(key, v);
    else if (key == "alpha")
        cfg.alpha = v;
    else if (key == "drop_attributes")
        cfg.drop_attributes = parse_count(key, v);
    else if (key == "drop_instances")
        cfg.drop_instances = parse_count(key, v);
    else
        throw InternalError("unhandled grid key '" + key + "'");
}

} // namespace

std::vector<SweepCell> expand_grid(const RunConfig& base,
                                   const std::vector<SweepAxis>& axes) {
    std::vector<SweepCell> cells;
    cells.push_back(SweepCell{"", base});
    for (const SweepAxis& axis : axes) {
        std::vector<SweepCell> next;
        next.reserve(cells.size() * axis.values.size());
        for (const SweepCell& cell : cells) {
            for (const std::string& v : axis.values) {
                SweepCell expanded = cell;
                apply_value(expanded.config, axis.key, v);
                expanded.name += (expanded.name.empty() ? "" : ",") + axis.key + "=" + v;
                next.push_back(std::move(expanded));
            }
        }
        cells = std::move(next);
    }
    if (cells.size() == 1 && cells[0].name.empty())
        cells[0].name = "single";
    return cells;
}

} // namespace shachom
