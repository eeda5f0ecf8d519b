#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kwsmote/matrix.hpp"
#include "kwsmote/synthetic.hpp"

namespace kwsmote {

/// Binary-labeled tabular data. Features are real-valued, labels are kept
/// verbatim as strings (two distinct values). Immutable by convention: all
/// operations build new datasets.
struct LabeledDataset {
    Matrix features;
    std::vector<std::string> labels;
    std::vector<std::string> feature_names; // empty when columns are unnamed
    std::string label_name = "label";
    /// Position of the label column in the source CSV; used to mirror the
    /// input schema on write. Unset for datasets built in memory (label goes
    /// last).
    std::optional<std::size_t> label_index;

    std::size_t n_samples() const noexcept { return features.rows(); }
    std::size_t n_features() const noexcept { return features.cols(); }

    /// Throws std::invalid_argument if shape, label, or finiteness
    /// invariants are broken.
    void check_valid() const;
};

struct ClassSummary {
    std::string minority_label;
    std::string majority_label;
    std::size_t minority_count = 0;
    std::size_t majority_count = 0;
    double imbalance_ratio = 1.0; // majority_count / minority_count
};

struct SplitSpec {
    double train_fraction = 0.7;
    std::uint64_t rng_seed = 0;
};

/// Loads a comma-delimited file with a header row. `label_column` selects the
/// label column by exact header name first, then (if it is all digits) by
/// zero-based index. All other cells must parse as finite reals; parse errors
/// report the file line and column. Fields are not quoted.
LabeledDataset load_csv(const std::string& path, const std::string& label_column);

/// Writes the dataset back in the schema it was loaded with (label column at
/// its original position, shortest round-trip number formatting). With
/// `emit_synthetic_flag` a trailing 0/1 `synthetic` column marks the last
/// `synthetic_tail` rows.
void write_csv(const LabeledDataset& ds, const std::string& path,
               std::size_t synthetic_tail = 0, bool emit_synthetic_flag = false);

/// Identifies minority and majority classes. On an exact tie the
/// lexicographically smaller label is designated minority.
ClassSummary class_summary(const LabeledDataset& ds);

/// Splits per class: train gets round(train_fraction * class_count) rows
/// (half away from zero), chosen by a seeded uniform shuffle. Both partitions
/// preserve the original row order. Throws if any class would end up empty on
/// either side.
std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& ds,
                                                           const SplitSpec& spec);

/// Returns a new dataset with the batch rows appended, all labeled `label`.
/// Original rows are unchanged and keep their order.
LabeledDataset append_synthetic(const LabeledDataset& ds, const SyntheticBatch& batch,
                                const std::string& label);

} // namespace kwsmote
