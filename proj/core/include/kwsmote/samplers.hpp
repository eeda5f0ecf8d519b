#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kwsmote/dataset.hpp"
#include "kwsmote/matrix.hpp"
#include "kwsmote/rng.hpp"
#include "kwsmote/synthetic.hpp"

namespace kwsmote {

enum class SamplerMethod { smote, kwsmote, normal_center, snocc };

/// Parses "smote" | "kwsmote" | "normal" | "snocc"; nullopt otherwise.
std::optional<SamplerMethod> method_from_name(const std::string& name);
std::string method_name(SamplerMethod method);

struct SamplerConfig {
    SamplerMethod method = SamplerMethod::kwsmote;
    std::size_t k_neighbors = 5;   // k
    std::size_t convex_points = 2; // c, kwsmote and snocc; must be <= k
    double threshold = 0.0;        // tau in [0, 1), kwsmote only
    std::optional<double> sigma;   // kwsmote kernel width; heuristic when absent
    double sigma_normal = 1.0;     // normal_center multiplier spread
    std::size_t max_attempt_factor = 100;

    /// Throws std::invalid_argument on any out-of-range parameter.
    void check_valid() const;
};

/// Thrown when the kwsmote candidate loop hits its attempt cap
/// (max_attempt_factor * n draws) with fewer than n accepted samples,
/// signaling that tau/sigma are incompatible with the data.
class AttemptCapError : public std::runtime_error {
public:
    AttemptCapError(std::size_t accepted, std::size_t skipped, std::size_t attempts);
    std::size_t accepted() const noexcept { return accepted_; }
    std::size_t skipped() const noexcept { return skipped_; }

private:
    std::size_t accepted_;
    std::size_t skipped_;
};

/// Number of synthetic samples needed to equalize the classes:
/// majority_count - minority_count.
std::size_t required_count(const ClassSummary& summary);

/// a + u * (b - a). The interpolation step shared by the segment and
/// center-pull generators.
std::vector<double> interpolate(std::span<const double> a, std::span<const double> b, double u);

/// Weighted sum of points with the given (already normalized) weights.
std::vector<double> convex_combine(const std::vector<std::span<const double>>& points,
                                   std::span<const double> weights);

/// Rebuilds sample `index` of the batch from its provenance record and the
/// minority matrix it was generated over. Used to audit the generators.
std::vector<double> reconstruct_sample(const Matrix& minority, const SyntheticBatch& batch,
                                       std::size_t index);

/// Classic segment interpolation: each sample is x_i + u * (x_j - x_i) with u
/// uniform on [0, 1), x_i a uniformly chosen minority row and x_j a uniformly
/// chosen member of its k nearest minority neighbors.
SyntheticBatch smote_generate(const Matrix& minority, std::size_t k, std::size_t count,
                              Rng& rng);

/// Center-pull variant: each sample is x_i + g * (center - x_i) where g is
/// Normal(1, sigma_normal), untruncated, and center is the mean of the
/// minority rows.
SyntheticBatch normal_center_generate(const Matrix& minority, double sigma_normal,
                                      std::size_t count, Rng& rng);

/// Convex-hull sampler: each sample is a convex combination of a seed row and
/// c of its k nearest neighbors, with weights drawn uniform on [0, 1) and
/// normalized to sum 1.
SyntheticBatch snocc_generate(const Matrix& minority, std::size_t k, std::size_t c,
                              std::size_t count, Rng& rng);

/// Kernel-weighted convex-combination sampler. Per candidate: pick a uniform
/// minority seed x_i, choose c of its k nearest neighbors uniformly without
/// replacement, weight each neighbor by the Gaussian kernel
/// w_j = exp(-||x_i - x_j||^2 / (2 sigma^2)) and the seed by w_0 = 1. If the
/// largest neighbor weight (the self-weight does not count) is below
/// cfg.threshold the candidate is skipped, otherwise the sample is
/// sum_j (w_j / D) x_j with D = sum_j w_j. Skipped candidates consume their
/// rng draws, so the stream position depends only on the candidate count.
SyntheticBatch kwsmote_generate(const Matrix& minority, const SamplerConfig& cfg,
                                std::size_t count, Rng& rng);

/// Dispatch on cfg.method.
SyntheticBatch generate_batch(const Matrix& minority, const SamplerConfig& cfg,
                              std::size_t count, Rng& rng);

struct ResampleResult {
    LabeledDataset dataset;
    SyntheticBatch batch;
    ClassSummary before;
};

/// Generates required_count samples over the minority rows and appends them
/// labeled minority, so the output classes are exactly balanced. Already
/// balanced input comes back unchanged (no generator draws).
ResampleResult resample_detailed(const LabeledDataset& ds, const SamplerConfig& cfg, Rng& rng);
LabeledDataset resample(const LabeledDataset& ds, const SamplerConfig& cfg, Rng& rng);

} // namespace kwsmote
