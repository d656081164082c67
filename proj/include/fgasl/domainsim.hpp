#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgasl/tensor.hpp"

namespace fgasl::domainsim {

/// Parameters of one synthetic acquisition domain. The intensity / noise /
/// texture / shape knobs stand in for scanner and protocol variation.
struct DomainSpec {
    std::string domain_id;
    double intensity_gain = 1.0;
    double intensity_bias = 0.0;
    double noise_sigma = 0.03;   // additive Gaussian noise std, intensity units
    double texture_freq = 4.0;   // background sinusoid frequency, cycles/image
    double shape_scale = 1.0;    // foreground size factor in [0.5, 1.5]
    int n_labeled = 10;
    int n_unlabeled = 100;
    int image_size = 32;
};

/// Throws std::invalid_argument naming the offending field.
void validate_spec(const DomainSpec& spec);

/// One image with an optional class-id mask. Unlabeled samples keep their
/// ground truth privately for diagnostics; training code only ever sees
/// mask(), which is empty for them.
class Sample {
 public:
    Sample() = default;
    Sample(Tensor image, IntMask gt, std::string domain_id, bool labeled)
        : image_(std::move(image)),
          gt_(std::move(gt)),
          domain_id_(std::move(domain_id)),
          labeled_(labeled) {}

    const Tensor& image() const { return image_; }
    Tensor& image() { return image_; }
    const std::string& domain_id() const { return domain_id_; }
    bool labeled() const { return labeled_; }

    /// Ground truth as visible to the trainer: absent for unlabeled samples.
    std::optional<IntMask> mask() const {
        if (labeled_) return gt_;
        return std::nullopt;
    }
    void set_mask(IntMask m) {
        gt_ = std::move(m);
        labeled_ = true;
    }

    /// Hidden ground truth, for evaluation and diagnostics only.
    const IntMask& diagnostic_ground_truth() const { return gt_; }

 private:
    Tensor image_;
    IntMask gt_;
    std::string domain_id_;
    bool labeled_ = false;
};

struct DomainData {
    DomainSpec spec;
    std::vector<Sample> samples;  // labeled first, then unlabeled

    std::vector<const Sample*> labeled_samples() const;
    std::vector<const Sample*> unlabeled_samples() const;
    /// Copy of the domain with every sample carrying its ground truth,
    /// used only by the fully supervised upper-bound baseline.
    DomainData fully_labeled_view() const;
};

struct FederationTask {
    std::vector<DomainData> seen;
    DomainData unseen;  // fully labeled evaluation set
    int num_classes = 3;
    std::uint64_t seed = 0;
};

struct TaskConfig {
    std::vector<DomainSpec> domains;  // K seen + 1 unseen candidates
    int unseen_index = -1;            // which entry of `domains` is held out
    int num_classes = 3;
    double min_shift_margin = 0.05;   // required parameter distance seen vs unseen
};

inline constexpr int kNumClasses = 3;  // background + 2 structures

/// Deterministically renders the domain's samples: textured background,
/// 1-3 foreground objects (class-1 ellipses, class-2 rectangles), then the
/// domain's gain/bias/noise transform, clipped to [0, 1]. The first
/// n_labeled samples are labeled.
std::vector<Sample> generate_domain(const DomainSpec& spec, std::uint64_t seed);

/// Distance between two domains in shift-parameter space (max over the
/// per-field differences, texture frequency scaled to O(1)).
double spec_distance(const DomainSpec& a, const DomainSpec& b);

/// Builds the leave-one-domain-out federation task.
FederationTask make_task(const TaskConfig& config, std::uint64_t seed);

/// Persists a task to a directory: one flat binary file per tensor plus a
/// JSON manifest, and loads it back bit-identically.
void save_task(const FederationTask& task, const std::string& dir);
FederationTask load_task(const std::string& dir);

}  // namespace fgasl::domainsim
