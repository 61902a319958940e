#include "shachom/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string_view>

#include "shachom/error.hpp"
#include "json_writer.hpp"
#include "rng.hpp"

namespace shachom {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_line(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return cells;
}

} // namespace

Dataset::Dataset(std::size_t n_instances, std::size_t n_attributes,
                 std::vector<double> values,
                 std::vector<std::string> attribute_names,
                 std::optional<std::vector<std::string>> labels,
                 std::string label_name)
    : n_instances_(n_instances),
      n_attributes_(n_attributes),
      values_(std::move(values)),
      attribute_names_(std::move(attribute_names)),
      labels_(std::move(labels)),
      label_name_(std::move(label_name)) {
    if (n_instances_ < 1 || n_attributes_ < 1)
        throw ValidationError("dataset must have at least one instance and one attribute");
    if (values_.size() != n_instances_ * n_attributes_)
        throw ValidationError("dataset value count does not match dimensions");
    if (attribute_names_.size() != n_attributes_)
        throw ValidationError("attribute name count does not match attribute count");
    if (labels_ && labels_->size() != n_instances_)
        throw ValidationError("label count does not match instance count");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw ValidationError("dataset contains a non-finite value at row " +
                                  std::to_string(i / n_attributes_ + 1) + ", column " +
                                  std::to_string(i % n_attributes_ + 1));
    }
}

const std::vector<std::string>& Dataset::labels() const {
    if (!labels_)
        throw ValidationError("dataset has no labels");
    return *labels_;
}

Dataset load_csv(const std::filesystem::path& path, bool has_header,
                 std::optional<std::size_t> label_column) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");

    std::vector<std::string> attribute_names;
    std::string label_name = "label";
    std::vector<double> values;
    std::vector<std::string> labels;
    std::size_t n_cols = 0;   // columns in the file, label included
    std::size_t data_row = 0; // 1-based, header excluded

    std::string line;
    bool header_pending = has_header;
    while (std::getline(in, line)) {
        if (trim(line).empty())
            continue;
        const auto cells = split_line(line);

        if (header_pending) {
            header_pending = false;
            n_cols = cells.size();
            if (label_column && *label_column >= n_cols)
                throw ValidationError("label column " + std::to_string(*label_column) +
                                      " out of range for " + std::to_string(n_cols) +
                                      " columns");
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (label_column && c == *label_column)
                    label_name = std::string(cells[c]);
                else
                    attribute_names.emplace_back(cells[c]);
            }
            continue;
        }

        ++data_row;
        if (n_cols == 0) {
            n_cols = cells.size();
            if (label_column && *label_column >= n_cols)
                throw ValidationError("label column " + std::to_string(*label_column) +
                                      " out of range for " + std::to_string(n_cols) +
                                      " columns");
        } else if (cells.size() != n_cols) {
            throw IoError("'" + path.string() + "': row " + std::to_string(data_row) +
                          " has " + std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(n_cols));
        }

        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (label_column && c == *label_column) {
                labels.emplace_back(cells[c]);
                continue;
            }
            double v = 0.0;
            const auto cell = cells[c];
            const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || end != cell.data() + cell.size() || !std::isfinite(v))
                throw IoError("'" + path.string() + "': non-numeric value '" +
                              std::string(cell) + "' at row " + std::to_string(data_row) +
                              ", column " + std::to_string(c + 1));
            values.push_back(v);
        }
    }

    if (data_row == 0)
        throw IoError("'" + path.string() + "' contains no data rows");

    const std::size_t n_attr = label_column ? n_cols - 1 : n_cols;
    if (n_attr == 0)
        throw ValidationError("'" + path.string() + "' has no feature columns");
    if (attribute_names.empty())
        for (std::size_t c = 0; c < n_attr; ++c)
            attribute_names.push_back("a" + std::to_string(c));

    std::optional<std::vector<std::string>> label_opt;
    if (label_column)
        label_opt = std::move(labels);
    return Dataset(data_row, n_attr, std::move(values), std::move(attribute_names),
                   std::move(label_opt), std::move(label_name));
}

void write_csv(const Dataset& ds, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");

    for (std::size_t c = 0; c < ds.n_attributes(); ++c) {
        if (c > 0)
            out << ',';
        out << ds.attribute_names()[c];
    }
    if (ds.has_labels())
        out << ',' << ds.label_name();
    out << '\n';

    for (std::size_t i = 0; i < ds.n_instances(); ++i) {
        for (std::size_t c = 0; c < ds.n_attributes(); ++c) {
            if (c > 0)
                out << ',';
            out << detail::format_double(ds.at(i, c));
        }
        if (ds.has_labels())
            out << ',' << ds.labels()[i];
        out << '\n';
    }
    if (!out)
        throw IoError("write failed for '" + path.string() + "'");
}

Dataset drop_last_attributes(const Dataset& ds, std::size_t m) {
    if (m >= ds.n_attributes())
        throw ValidationError("cannot drop " + std::to_string(m) + " of " +
                              std::to_string(ds.n_attributes()) + " attributes");
    const std::size_t keep = ds.n_attributes() - m;
    std::vector<double> values;
    values.reserve(ds.n_instances() * keep);
    for (std::size_t i = 0; i < ds.n_instances(); ++i)
        for (std::size_t c = 0; c < keep; ++c)
            values.push_back(ds.at(i, c));
    std::vector<std::string> names(ds.attribute_names().begin(),
                                   ds.attribute_names().begin() + static_cast<std::ptrdiff_t>(keep));
    std::optional<std::vector<std::string>> labels;
    if (ds.has_labels())
        labels = ds.labels();
    return Dataset(ds.n_instances(), keep, std::move(values), std::move(names),
                   std::move(labels), ds.label_name());
}

Dataset drop_last_instances(const Dataset& ds, std::size_t m) {
    if (m >= ds.n_instances())
        throw ValidationError("cannot drop " + std::to_string(m) + " of " +
                              std::to_string(ds.n_instances()) + " instances");
    const std::size_t keep = ds.n_instances() - m;
    std::vector<double> values;
    values.reserve(keep * ds.n_attributes());
    for (std::size_t i = 0; i < keep; ++i)
        for (std::size_t c = 0; c < ds.n_attributes(); ++c)
            values.push_back(ds.at(i, c));
    std::optional<std::vector<std::string>> labels;
    if (ds.has_labels())
        labels = std::vector<std::string>(ds.labels().begin(),
                                          ds.labels().begin() + static_cast<std::ptrdiff_t>(keep));
    return Dataset(keep, ds.n_attributes(), std::move(values),
                   ds.attribute_names(), std::move(labels), ds.label_name());
}

namespace {

Dataset take_rows(const Dataset& ds, const std::vector<std::size_t>& rows) {
    std::vector<double> values;
    values.reserve(rows.size() * ds.n_attributes());
    std::vector<std::string> labels;
    labels.reserve(rows.size());
    for (const std::size_t r : rows) {
        const auto row = ds.row(r);
        values.insert(values.end(), row.begin(), row.end());
        labels.push_back(ds.labels()[r]);
    }
    return Dataset(rows.size(), ds.n_attributes(), std::move(values),
                   ds.attribute_names(), std::move(labels), ds.label_name());
}

} // namespace

SplitPair split(const Dataset& ds, double ratio, std::uint64_t seed, bool stratify) {
    if (!ds.has_labels())
        throw ValidationError("split requires a labeled dataset");
    if (!(ratio > 0.0 && ratio < 1.0))
        throw ValidationError("split ratio must lie in (0, 1)");

    const std::size_t n = ds.n_instances();
    const std::size_t n_train =
        static_cast<std::size_t>(std::lround(ratio * static_cast<double>(n)));
    if (n_train < 1 || n_train >= n)
        throw ValidationError("split ratio " + detail::format_double(ratio) +
                              " leaves an empty side for " + std::to_string(n) + " rows");

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> train_idx;
    train_idx.reserve(n_train);

    if (!stratify) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i)
            order[i] = i;
        detail::deterministic_shuffle(order, rng);
        train_idx.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
    } else {
        // Group rows by class in first-occurrence order.
        std::vector<std::string> class_order;
        std::vector<std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& lbl = ds.labels()[i];
            std::size_t g = 0;
            for (; g < class_order.size(); ++g)
                if (class_order[g] == lbl)
                    break;
            if (g == class_order.size()) {
                class_order.push_back(lbl);
                groups.emplace_back();
            }
            groups[g].push_back(i);
        }
        for (std::size_t g = 0; g < groups.size(); ++g)
            if (groups[g].size() < 2)
                throw ValidationError("class '" + class_order[g] +
                                      "' has fewer than 2 members; cannot stratify");

        // Largest-remainder allocation: floor(ratio * size) per class, then
        // hand the remaining slots to the classes with the biggest fractional
        // parts. Every class ends within one instance of its exact share.
        std::vector<std::size_t> base(groups.size());
        std::vector<double> frac(groups.size());
        std::size_t assigned = 0;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const double target = ratio * static_cast<double>(groups[g].size());
            base[g] = static_cast<std::size_t>(std::floor(target));
            frac[g] = target - std::floor(target);
            assigned += base[g];
        }
        if (assigned > n_train)
            throw InternalError("stratified allocation overshot the train size");
        std::size_t remaining = n_train - assigned;
        std::vector<std::size_t> by_frac(groups.size());
        for (std::size_t g = 0; g < groups.size(); ++g)
            by_frac[g] = g;
        std::stable_sort(by_frac.begin(), by_frac.end(),
                         [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
        for (std::size_t r = 0; r < remaining && r < by_frac.size(); ++r)
            ++base[by_frac[r]];
        remaining -= std::min(remaining, by_frac.size());
        if (remaining > 0)
            throw InternalError("stratified allocation could not place every train row");

        for (std::size_t g = 0; g < groups.size(); ++g) {
            detail::deterministic_shuffle(groups[g], rng);
            const std::size_t take = std::min(base[g], groups[g].size());
            train_idx.insert(train_idx.end(), groups[g].begin(),
                             groups[g].begin() + static_cast<std::ptrdiff_t>(take));
        }
    }

    std::sort(train_idx.begin(), train_idx.end());
    std::vector<bool> in_train(n, false);
    for (const std::size_t i : train_idx)
        in_train[i] = true;
    std::vector<std::size_t> test_idx;
    test_idx.reserve(n - train_idx.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!in_train[i])
            test_idx.push_back(i);

    if (train_idx.empty() || test_idx.empty())
        throw ValidationError("split produced an empty side");

    SplitPair pair{take_rows(ds, train_idx), take_rows(ds, test_idx),
                   seed, ratio, std::move(train_idx), std::move(test_idx)};
    return pair;
}

} // namespace shachom
