#include "shachom/evaluate.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "shachom/error.hpp"
#include "json_writer.hpp"

namespace shachom {

Dataset annotate_with_clusters(const Dataset& ds, const Partition& p) {
    if (p.assignment.size() != ds.n_instances())
        throw ValidationError("partition covers " + std::to_string(p.assignment.size()) +
                              " instances, dataset has " +
                              std::to_string(ds.n_instances()));
    std::vector<std::string> labels;
    labels.reserve(ds.n_instances());
    for (const std::uint32_t c : p.assignment)
        labels.push_back(std::to_string(c));
    std::vector<double> values;
    values.reserve(ds.n_instances() * ds.n_attributes());
    for (std::size_t i = 0; i < ds.n_instances(); ++i)
        values.insert(values.end(), ds.row(i).begin(), ds.row(i).end());
    return Dataset(ds.n_instances(), ds.n_attributes(), std::move(values),
                   ds.attribute_names(), std::move(labels), "cluster");
}

namespace {

/// Numeric-aware class ordering so "2" sorts before "10" in reports.
bool class_less(const std::string& a, const std::string& b) {
    long long ia = 0, ib = 0;
    const auto ra = std::from_chars(a.data(), a.data() + a.size(), ia);
    const auto rb = std::from_chars(b.data(), b.data() + b.size(), ib);
    const bool na = ra.ec == std::errc{} && ra.ptr == a.data() + a.size();
    const bool nb = rb.ec == std::errc{} && rb.ptr == b.data() + b.size();
    if (na && nb)
        return ia < ib;
    if (na != nb)
        return na; // numbers before free-form labels
    return a < b;
}

} // namespace

EvalReport evaluate(const DecisionNode& tree, const NominalDataset& test) {
    if (test.n_rows == 0)
        throw ValidationError("evaluate: empty test set");

    std::vector<std::string> predicted;
    predicted.reserve(test.n_rows);
    for (std::size_t i = 0; i < test.n_rows; ++i)
        predicted.push_back(id3_predict(tree, test.row(i)));

    // class set = union of actual and predicted labels
    std::vector<std::string> classes;
    const auto note = [&](const std::string& c) {
        if (std::find(classes.begin(), classes.end(), c) == classes.end())
            classes.push_back(c);
    };
    for (const auto& c : test.classes)
        note(c);
    for (const auto& c : predicted)
        note(c);
    std::sort(classes.begin(), classes.end(), class_less);

    std::map<std::string, std::size_t> index;
    for (std::size_t c = 0; c < classes.size(); ++c)
        index[classes[c]] = c;

    // confusion[actual][predicted]
    std::vector<std::vector<std::size_t>> confusion(
        classes.size(), std::vector<std::size_t>(classes.size(), 0));
    for (std::size_t i = 0; i < test.n_rows; ++i)
        ++confusion[index[test.classes[i]]][index[predicted[i]]];

    const double total = static_cast<double>(test.n_rows);
    EvalReport report;

    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::size_t tp = confusion[c][c];
        std::size_t fn = 0, fp = 0;
        for (std::size_t o = 0; o < classes.size(); ++o) {
            if (o == c)
                continue;
            fn += confusion[c][o];
            fp += confusion[o][c];
        }
        const std::size_t tn = test.n_rows - tp - fn - fp;

        ClassMetrics m;
        m.support = tp + fn;
        if (tp + fn > 0) {
            m.tp_rate = static_cast<double>(tp) / static_cast<double>(tp + fn);
        } else {
            report.flags.push_back("class '" + classes[c] +
                                   "': TP+FN=0, tp_rate/recall reported as 0");
        }
        if (fp + tn > 0) {
            m.fp_rate = static_cast<double>(fp) / static_cast<double>(fp + tn);
        } else {
            report.flags.push_back("class '" + classes[c] +
                                   "': FP+TN=0, fp_rate reported as 0");
        }
        if (tp + fp > 0) {
            m.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
        } else {
            report.flags.push_back("class '" + classes[c] +
                                   "': TP+FP=0, precision reported as 0");
        }
        m.recall = m.tp_rate;
        report.per_class.emplace_back(classes[c], m);
    }

    // support-weighted means; zero-support classes contribute nothing
    ClassMetrics w;
    w.support = test.n_rows;
    for (const auto& [cls, m] : report.per_class) {
        const double share = static_cast<double>(m.support) / total;
        w.tp_rate += share * m.tp_rate;
        w.fp_rate += share * m.fp_rate;
        w.precision += share * m.precision;
        w.recall += share * m.recall;
    }
    report.weighted = w;
    return report;
}

std::string report_to_json(const EvalReport& report, const std::string& config_json) {
    using detail::format_double;
    using detail::json_str;

    const auto metrics = [&](const ClassMetrics& m) {
        std::string s = "{\"tp_rate\": " + format_double(m.tp_rate);
        s += ", \"fp_rate\": " + format_double(m.fp_rate);
        s += ", \"precision\": " + format_double(m.precision);
        s += ", \"recall\": " + format_double(m.recall);
        s += ", \"support\": " + std::to_string(m.support) + "}";
        return s;
    };

    std::string out = "{\n";
    out += "  \"schema\": \"shachom.report/1\",\n";
    out += "  \"config\": " + config_json + ",\n";
    out += "  \"k\": " + std::to_string(report.k) + ",\n";
    out += "  \"alpha\": [";
    for (std::size_t t = 0; t < report.alpha.size(); ++t) {
        if (t > 0)
            out += ", ";
        out += format_double(report.alpha[t]);
    }
    out += "],\n";
    out += "  \"split_seed\": " + std::to_string(report.split_seed) + ",\n";
    out += "  \"split_ratio\": " + format_double(report.split_ratio) + ",\n";
    out += "  \"bins\": " + std::to_string(report.n_bins) + ",\n";
    out += "  \"weighted\": " + metrics(report.weighted) + ",\n";
    out += "  \"per_class\": [";
    for (std::size_t c = 0; c < report.per_class.size(); ++c) {
        out += (c == 0 ? "\n" : ",\n");
        out += "    {\"class\": " + json_str(report.per_class[c].first) + ", \"metrics\": " +
               metrics(report.per_class[c].second) + "}";
    }
    out += report.per_class.empty() ? "],\n" : "\n  ],\n";
    out += "  \"flags\": [";
    for (std::size_t f = 0; f < report.flags.size(); ++f) {
        if (f > 0)
            out += ", ";
        out += json_str(report.flags[f]);
    }
    out += "]\n";
    out += "}\n";
    return out;
}

} // namespace shachom
