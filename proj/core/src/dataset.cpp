#include "kwsmote/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "kwsmote/rng.hpp"
#include "text.hpp"

namespace kwsmote {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

bool parse_double(const std::string& cell, double& out) {
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

using detail::format_double;

std::map<std::string, std::size_t> label_counts(const LabeledDataset& ds) {
    std::map<std::string, std::size_t> counts;
    for (const auto& label : ds.labels) {
        ++counts[label];
    }
    return counts;
}

} // namespace

void LabeledDataset::check_valid() const {
    if (features.rows() != labels.size()) {
        throw std::invalid_argument("dataset: feature row count (" +
                                    std::to_string(features.rows()) +
                                    ") does not match label count (" +
                                    std::to_string(labels.size()) + ")");
    }
    if (!feature_names.empty() && feature_names.size() != features.cols()) {
        throw std::invalid_argument("dataset: feature name count does not match width");
    }
    std::map<std::string, std::size_t> counts = label_counts(*this);
    if (counts.size() != 2) {
        throw std::invalid_argument("dataset: expected exactly 2 distinct labels, found " +
                                    std::to_string(counts.size()));
    }
    for (double v : features.data()) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("dataset: non-finite feature value");
        }
    }
}

LabeledDataset load_csv(const std::string& path, const std::string& label_column) {
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error(path + ": cannot open file");
    }

    std::string line;
    if (!std::getline(file, line)) {
        throw std::runtime_error(path + ": empty file (expected a header row)");
    }
    const std::vector<std::string> header = split_line(line);
    if (header.empty()) {
        throw std::runtime_error(path + ": empty header row");
    }

    // Label column: exact header name first, then all-digit zero-based index.
    std::size_t label_idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == label_column) {
            label_idx = i;
            break;
        }
    }
    if (label_idx == header.size()) {
        if (!label_column.empty() &&
            std::all_of(label_column.begin(), label_column.end(),
                        [](unsigned char c) { return std::isdigit(c); })) {
            const std::size_t idx = std::stoull(label_column);
            if (idx >= header.size()) {
                throw std::runtime_error(path + ": label column index " + label_column +
                                         " out of range (file has " +
                                         std::to_string(header.size()) + " columns)");
            }
            label_idx = idx;
        } else {
            throw std::runtime_error(path + ": label column '" + label_column +
                                     "' not found in header");
        }
    }

    LabeledDataset ds;
    ds.label_name = header[label_idx];
    ds.label_index = label_idx;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i != label_idx) {
            ds.feature_names.push_back(header[i]);
        }
    }
    ds.features = Matrix(0, header.size() - 1);

    std::vector<double> row(header.size() - 1);
    std::size_t line_no = 1;
    while (std::getline(file, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size()) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected " +
                                     std::to_string(header.size()) + " cells, found " +
                                     std::to_string(cells.size()));
        }
        std::size_t f = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i == label_idx) {
                ds.labels.push_back(cells[i]);
                continue;
            }
            double value = 0.0;
            if (!parse_double(cells[i], value)) {
                throw std::runtime_error(path + ":" + std::to_string(line_no) + ": column '" +
                                         header[i] + "' (#" + std::to_string(i) +
                                         "): cannot parse '" + cells[i] +
                                         "' as a finite number");
            }
            row[f++] = value;
        }
        ds.features.append_row(row);
    }

    if (ds.n_samples() == 0) {
        throw std::runtime_error(path + ": no data rows");
    }
    std::map<std::string, std::size_t> counts = label_counts(ds);
    if (counts.size() != 2) {
        std::string found;
        for (const auto& [label, n] : counts) {
            found += (found.empty() ? "" : ", ") + ("'" + label + "'");
        }
        throw std::runtime_error(path + ": expected exactly 2 distinct labels, found " +
                                 std::to_string(counts.size()) + " (" + found + ")");
    }
    return ds;
}

void write_csv(const LabeledDataset& ds, const std::string& path,
               std::size_t synthetic_tail, bool emit_synthetic_flag) {
    if (synthetic_tail > ds.n_samples()) {
        throw std::invalid_argument("write_csv: synthetic_tail exceeds row count");
    }
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error(path + ": cannot open file for writing");
    }

    const std::size_t d = ds.n_features();
    const std::size_t label_at = std::min(ds.label_index.value_or(d), d);

    for (std::size_t i = 0, f = 0; i <= d; ++i) {
        if (i > 0) {
            file << ',';
        }
        if (i == label_at) {
            file << ds.label_name;
        } else {
            file << (f < ds.feature_names.size() ? ds.feature_names[f]
                                                 : "f" + std::to_string(f));
            ++f;
        }
    }
    if (emit_synthetic_flag) {
        file << ",synthetic";
    }
    file << '\n';

    const std::size_t first_synthetic = ds.n_samples() - synthetic_tail;
    for (std::size_t r = 0; r < ds.n_samples(); ++r) {
        for (std::size_t i = 0, f = 0; i <= d; ++i) {
            if (i > 0) {
                file << ',';
            }
            if (i == label_at) {
                file << ds.labels[r];
            } else {
                file << format_double(ds.features(r, f));
                ++f;
            }
        }
        if (emit_synthetic_flag) {
            file << (r >= first_synthetic ? ",1" : ",0");
        }
        file << '\n';
    }
    if (!file) {
        throw std::runtime_error(path + ": write failed");
    }
}

ClassSummary class_summary(const LabeledDataset& ds) {
    ds.check_valid();
    const std::map<std::string, std::size_t> counts = label_counts(ds);
    // std::map iterates in lexicographic order, so `first` is the canonical
    // tie-break winner.
    const auto first = counts.begin();
    const auto second = std::next(first);

    ClassSummary summary;
    if (first->second <= second->second) {
        summary.minority_label = first->first;
        summary.minority_count = first->second;
        summary.majority_label = second->first;
        summary.majority_count = second->second;
    } else {
        summary.minority_label = second->first;
        summary.minority_count = second->second;
        summary.majority_label = first->first;
        summary.majority_count = first->second;
    }
    summary.imbalance_ratio =
        static_cast<double>(summary.majority_count) / static_cast<double>(summary.minority_count);
    return summary;
}

namespace {

LabeledDataset take_rows(const LabeledDataset& ds, const std::vector<std::size_t>& rows) {
    LabeledDataset out;
    out.feature_names = ds.feature_names;
    out.label_name = ds.label_name;
    out.label_index = ds.label_index;
    out.features = Matrix(0, ds.n_features());
    out.features.reserve_rows(rows.size());
    out.labels.reserve(rows.size());
    for (std::size_t r : rows) {
        out.features.append_row(ds.features.row(r));
        out.labels.push_back(ds.labels[r]);
    }
    return out;
}

/// round(x) half away from zero, as a count.
std::size_t round_count(double x) {
    return static_cast<std::size_t>(std::llround(x));
}

} // namespace

std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& ds,
                                                           const SplitSpec& spec) {
    ds.check_valid();
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
        throw std::invalid_argument("stratified_split: train_fraction must be in (0, 1)");
    }

    // Class processing order is the canonical label order, independent of row
    // order, so the draw sequence is reproducible.
    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t r = 0; r < ds.n_samples(); ++r) {
        by_class[ds.labels[r]].push_back(r);
    }

    Rng rng(spec.rng_seed);
    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> test_rows;
    for (auto& [label, rows] : by_class) {
        const std::size_t n_train = round_count(spec.train_fraction * rows.size());
        if (n_train == 0 || n_train == rows.size()) {
            throw std::invalid_argument("stratified_split: class '" + label +
                                        "' would be empty in one partition (" +
                                        std::to_string(rows.size()) + " rows, fraction " +
                                        std::to_string(spec.train_fraction) + ")");
        }
        // Fisher-Yates over the class's row indices.
        for (std::size_t i = rows.size() - 1; i > 0; --i) {
            std::swap(rows[i], rows[rng.uniform_index(i + 1)]);
        }
        train_rows.insert(train_rows.end(), rows.begin(), rows.begin() + n_train);
        test_rows.insert(test_rows.end(), rows.begin() + n_train, rows.end());
    }
    std::sort(train_rows.begin(), train_rows.end());
    std::sort(test_rows.begin(), test_rows.end());
    return {take_rows(ds, train_rows), take_rows(ds, test_rows)};
}

LabeledDataset append_synthetic(const LabeledDataset& ds, const SyntheticBatch& batch,
                                const std::string& label) {
    if (batch.size() > 0 && batch.samples.cols() != ds.n_features()) {
        throw std::invalid_argument("append_synthetic: batch width (" +
                                    std::to_string(batch.samples.cols()) +
                                    ") does not match dataset width (" +
                                    std::to_string(ds.n_features()) + ")");
    }
    LabeledDataset out = ds;
    out.features.reserve_rows(out.n_samples() + batch.size());
    for (std::size_t r = 0; r < batch.size(); ++r) {
        out.features.append_row(batch.samples.row(r));
        out.labels.push_back(label);
    }
    return out;
}

} // namespace kwsmote
