#include "kwsmote/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kwsmote/kernel.hpp"
#include "kwsmote/neighbors.hpp"

namespace kwsmote {

std::optional<SamplerMethod> method_from_name(const std::string& name) {
    if (name == "smote") {
        return SamplerMethod::smote;
    }
    if (name == "kwsmote") {
        return SamplerMethod::kwsmote;
    }
    if (name == "normal") {
        return SamplerMethod::normal_center;
    }
    if (name == "snocc") {
        return SamplerMethod::snocc;
    }
    return std::nullopt;
}

std::string method_name(SamplerMethod method) {
    switch (method) {
    case SamplerMethod::smote:
        return "smote";
    case SamplerMethod::kwsmote:
        return "kwsmote";
    case SamplerMethod::normal_center:
        return "normal";
    case SamplerMethod::snocc:
        return "snocc";
    }
    return "unknown";
}

void SamplerConfig::check_valid() const {
    if (k_neighbors < 1) {
        throw std::invalid_argument("sampler config: k_neighbors must be positive");
    }
    if (convex_points < 1) {
        throw std::invalid_argument("sampler config: convex_points must be positive");
    }
    if (convex_points > k_neighbors) {
        throw std::invalid_argument("sampler config: convex_points (" +
                                    std::to_string(convex_points) +
                                    ") must not exceed k_neighbors (" +
                                    std::to_string(k_neighbors) + ")");
    }
    if (!(threshold >= 0.0 && threshold < 1.0)) {
        throw std::invalid_argument(
            "sampler config: threshold must be in [0, 1); a threshold of 1 would reject "
            "every candidate since neighbor weights of distinct points are below 1");
    }
    if (sigma && (!(*sigma > 0.0) || !std::isfinite(*sigma))) {
        throw std::invalid_argument("sampler config: sigma must be positive and finite");
    }
    if (!(sigma_normal > 0.0) || !std::isfinite(sigma_normal)) {
        throw std::invalid_argument("sampler config: sigma_normal must be positive and finite");
    }
    if (max_attempt_factor < 1) {
        throw std::invalid_argument("sampler config: max_attempt_factor must be positive");
    }
}

AttemptCapError::AttemptCapError(std::size_t accepted, std::size_t skipped, std::size_t attempts)
    : std::runtime_error("kwsmote: attempt cap reached after " + std::to_string(attempts) +
                         " candidate draws with " + std::to_string(accepted) +
                         " accepted and " + std::to_string(skipped) +
                         " skipped; tau/sigma are incompatible with the data"),
      accepted_(accepted), skipped_(skipped) {}

std::size_t required_count(const ClassSummary& summary) {
    return summary.majority_count - summary.minority_count;
}

std::vector<double> interpolate(std::span<const double> a, std::span<const double> b, double u) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("interpolate: length mismatch");
    }
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + u * (b[i] - a[i]);
    }
    return out;
}

std::vector<double> convex_combine(const std::vector<std::span<const double>>& points,
                                   std::span<const double> weights) {
    if (points.empty() || points.size() != weights.size()) {
        throw std::invalid_argument("convex_combine: need one weight per point");
    }
    std::vector<double> out(points.front().size(), 0.0);
    for (std::size_t p = 0; p < points.size(); ++p) {
        if (points[p].size() != out.size()) {
            throw std::invalid_argument("convex_combine: point length mismatch");
        }
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] += weights[p] * points[p][i];
        }
    }
    return out;
}

std::vector<double> reconstruct_sample(const Matrix& minority, const SyntheticBatch& batch,
                                       std::size_t index) {
    const SampleProvenance& prov = batch.provenance.at(index);
    std::vector<std::span<const double>> points;
    points.push_back(minority.row(prov.seed_index));
    for (std::size_t n : prov.neighbor_indices) {
        points.push_back(minority.row(n));
    }
    if (prov.neighbor_indices.empty() && !batch.center.empty()) {
        points.emplace_back(batch.center);
    }
    std::vector<double> normalized(prov.raw_weights.size());
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        normalized[i] = prov.raw_weights[i] / prov.normalizer;
    }
    return convex_combine(points, normalized);
}

namespace {

SyntheticBatch empty_batch(std::size_t width) {
    SyntheticBatch batch;
    batch.samples = Matrix(0, width);
    return batch;
}

void require_rows(const Matrix& minority, std::size_t k, const char* who) {
    if (minority.rows() < k + 1) {
        throw std::invalid_argument(std::string(who) + ": need at least k+1 = " +
                                    std::to_string(k + 1) + " minority rows, have " +
                                    std::to_string(minority.rows()));
    }
}

/// First `c` entries of a partial Fisher-Yates over [0, k): c distinct slots
/// drawn uniformly without replacement.
std::vector<std::size_t> draw_without_replacement(std::size_t k, std::size_t c, Rng& rng) {
    std::vector<std::size_t> slots(k);
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    for (std::size_t i = 0; i < c; ++i) {
        std::swap(slots[i], slots[i + rng.uniform_index(k - i)]);
    }
    slots.resize(c);
    return slots;
}

} // namespace

SyntheticBatch smote_generate(const Matrix& minority, std::size_t k, std::size_t count,
                              Rng& rng) {
    if (k < 1) {
        throw std::invalid_argument("smote_generate: k must be positive");
    }
    require_rows(minority, k, "smote_generate");
    const std::vector<NeighborList> table = knn_table(minority, k);

    SyntheticBatch batch = empty_batch(minority.cols());
    batch.samples.reserve_rows(count);
    batch.provenance.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t i = rng.uniform_index(minority.rows());
        const std::size_t j = table[i].indices[rng.uniform_index(k)];
        const double u = rng.uniform();
        batch.samples.append_row(interpolate(minority.row(i), minority.row(j), u));
        batch.provenance.push_back({i, {j}, {1.0 - u, u}, 1.0});
    }
    return batch;
}

SyntheticBatch normal_center_generate(const Matrix& minority, double sigma_normal,
                                      std::size_t count, Rng& rng) {
    if (!(sigma_normal > 0.0) || !std::isfinite(sigma_normal)) {
        throw std::invalid_argument("normal_center_generate: sigma_normal must be positive");
    }
    if (minority.rows() < 2) {
        throw std::invalid_argument("normal_center_generate: need at least 2 minority rows");
    }

    std::vector<double> center(minority.cols(), 0.0);
    for (std::size_t r = 0; r < minority.rows(); ++r) {
        const auto row = minority.row(r);
        for (std::size_t c = 0; c < center.size(); ++c) {
            center[c] += row[c];
        }
    }
    for (double& v : center) {
        v /= static_cast<double>(minority.rows());
    }

    SyntheticBatch batch = empty_batch(minority.cols());
    batch.center = center;
    batch.samples.reserve_rows(count);
    batch.provenance.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t i = rng.uniform_index(minority.rows());
        const double g = 1.0 + sigma_normal * rng.normal(); // untruncated
        batch.samples.append_row(interpolate(minority.row(i), center, g));
        batch.provenance.push_back({i, {}, {1.0 - g, g}, 1.0});
    }
    return batch;
}

SyntheticBatch snocc_generate(const Matrix& minority, std::size_t k, std::size_t c,
                              std::size_t count, Rng& rng) {
    if (k < 1 || c < 1 || c > k) {
        throw std::invalid_argument("snocc_generate: need 1 <= c <= k");
    }
    require_rows(minority, k, "snocc_generate");
    const std::vector<NeighborList> table = knn_table(minority, k);

    SyntheticBatch batch = empty_batch(minority.cols());
    batch.samples.reserve_rows(count);
    batch.provenance.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t i = rng.uniform_index(minority.rows());
        const std::vector<std::size_t> slots = draw_without_replacement(k, c, rng);

        std::vector<std::size_t> cited(c);
        std::vector<std::span<const double>> points;
        points.reserve(c + 1);
        points.push_back(minority.row(i));
        for (std::size_t s = 0; s < c; ++s) {
            cited[s] = table[i].indices[slots[s]];
            points.push_back(minority.row(cited[s]));
        }

        std::vector<double> weights(c + 1);
        double total = 0.0;
        do {
            total = 0.0;
            for (double& w : weights) {
                w = rng.uniform();
                total += w;
            }
        } while (total <= 0.0); // all-zero draw is astronomically rare but invalid

        std::vector<double> normalized(weights);
        for (double& w : normalized) {
            w /= total;
        }
        batch.samples.append_row(convex_combine(points, normalized));
        batch.provenance.push_back({i, std::move(cited), std::move(weights), total});
    }
    return batch;
}

SyntheticBatch kwsmote_generate(const Matrix& minority, const SamplerConfig& cfg,
                                std::size_t count, Rng& rng) {
    cfg.check_valid();
    if (cfg.method != SamplerMethod::kwsmote) {
        throw std::invalid_argument("kwsmote_generate: config method is not kwsmote");
    }
    require_rows(minority, cfg.k_neighbors, "kwsmote_generate");

    const Bandwidth bw = cfg.sigma ? user_bandwidth(*cfg.sigma) : default_bandwidth(minority);
    const std::size_t k = cfg.k_neighbors;
    const std::size_t c = cfg.convex_points;
    const std::vector<NeighborList> table = knn_table(minority, k);

    SyntheticBatch batch = empty_batch(minority.cols());
    batch.samples.reserve_rows(count);
    batch.provenance.reserve(count);

    const std::size_t attempt_cap = cfg.max_attempt_factor * count;
    std::size_t attempts = 0;
    while (batch.size() < count) {
        if (attempts >= attempt_cap) {
            throw AttemptCapError(batch.size(), batch.skipped_count, attempts);
        }
        ++attempts;

        const std::size_t i = rng.uniform_index(minority.rows());
        const std::vector<std::size_t> slots = draw_without_replacement(k, c, rng);

        // Seed weight is identically 1; neighbor weights fall off with
        // distance. The threshold keys on the neighbor weights only.
        std::vector<std::size_t> cited(c);
        std::vector<double> weights(c + 1);
        weights[0] = 1.0;
        double max_neighbor_weight = 0.0;
        double total = 1.0;
        for (std::size_t s = 0; s < c; ++s) {
            cited[s] = table[i].indices[slots[s]];
            const double dist = table[i].distances[slots[s]];
            const double w = gaussian_weight(dist * dist, bw.sigma);
            weights[s + 1] = w;
            max_neighbor_weight = std::max(max_neighbor_weight, w);
            total += w;
        }
        if (max_neighbor_weight < cfg.threshold) {
            ++batch.skipped_count;
            continue;
        }

        std::vector<std::span<const double>> points;
        points.reserve(c + 1);
        points.push_back(minority.row(i));
        for (std::size_t s = 0; s < c; ++s) {
            points.push_back(minority.row(cited[s]));
        }
        std::vector<double> normalized(weights);
        for (double& w : normalized) {
            w /= total;
        }
        batch.samples.append_row(convex_combine(points, normalized));
        batch.provenance.push_back({i, std::move(cited), std::move(weights), total});
    }
    return batch;
}

SyntheticBatch generate_batch(const Matrix& minority, const SamplerConfig& cfg,
                              std::size_t count, Rng& rng) {
    switch (cfg.method) {
    case SamplerMethod::smote:
        return smote_generate(minority, cfg.k_neighbors, count, rng);
    case SamplerMethod::kwsmote:
        return kwsmote_generate(minority, cfg, count, rng);
    case SamplerMethod::normal_center:
        return normal_center_generate(minority, cfg.sigma_normal, count, rng);
    case SamplerMethod::snocc:
        return snocc_generate(minority, cfg.k_neighbors, cfg.convex_points, count, rng);
    }
    throw std::invalid_argument("generate_batch: unknown method");
}

ResampleResult resample_detailed(const LabeledDataset& ds, const SamplerConfig& cfg, Rng& rng) {
    cfg.check_valid();
    const ClassSummary before = class_summary(ds); // validates the dataset
    const std::size_t needed = required_count(before);
    if (needed == 0) {
        return {ds, empty_batch(ds.n_features()), before};
    }

    Matrix minority(0, ds.n_features());
    minority.reserve_rows(before.minority_count);
    for (std::size_t r = 0; r < ds.n_samples(); ++r) {
        if (ds.labels[r] == before.minority_label) {
            minority.append_row(ds.features.row(r));
        }
    }

    SyntheticBatch batch = generate_batch(minority, cfg, needed, rng);
    LabeledDataset out = append_synthetic(ds, batch, before.minority_label);
    return {std::move(out), std::move(batch), before};
}

LabeledDataset resample(const LabeledDataset& ds, const SamplerConfig& cfg, Rng& rng) {
    return resample_detailed(ds, cfg, rng).dataset;
}

} // namespace kwsmote
