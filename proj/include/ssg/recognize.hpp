#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ssg/image.hpp"
#include "ssg/lst.hpp"

namespace ssg {

struct LabeledSample {
    std::string label;
    Image image;
};

struct LabeledDataset {
    std::vector<LabeledSample> samples;

    /// Distinct labels in lexicographic order.
    std::vector<std::string> class_labels() const;
    std::size_t size() const { return samples.size(); }
};

/// Load `root/<class_name>/*.pgm`; labels come from the directory names,
/// ordering is lexicographic (directories, then files). Every regular file
/// in a class directory must parse as a PGM. Throws EmptyClass for classes
/// with fewer than two images, UnreadableImage naming an unparseable file,
/// InsufficientSamples when fewer than two classes are present.
LabeledDataset ingest_dataset(const std::filesystem::path& root);

struct FeatureVector {
    std::vector<double> values;
    std::string label;
};

/// Response map of the named operator, center-cropped to a multiple of the
/// downsample factor, block-mean pooled and flattened row-major.
FeatureVector extract_features(const Image& img, const std::string& method,
                               int downsample, const LstConfig& cfg = {});

/// k-nearest-neighbour vote under Euclidean distance. Distance ties resolve
/// in training-set order; vote ties go to the class with the smallest summed
/// distance, then to the lexicographically smallest label. k = 1 is the
/// minimum-distance classifier.
std::string knn_classify(const std::vector<FeatureVector>& train,
                         const FeatureVector& test, int k = 1);

struct SplitResult {
    LabeledDataset train;
    LabeledDataset test;
};

/// Stratified shuffle-split: per class, floor(train_fraction * n) samples go
/// to the training set. Deterministic given the seed. Throws
/// InsufficientSamples when any class would end up without train or test
/// samples.
SplitResult split(const LabeledDataset& dataset, double train_fraction,
                  std::uint64_t seed);

struct ExperimentOptions {
    std::string method = "lst";
    double train_fraction = 0.5;
    double noise_pct = 0.0;  // applied to test images only
    std::uint64_t seed = 0;
    int downsample = 4;
    int k = 1;
    /// Permutes training labels after the split; the chance-level control.
    bool shuffle_train_labels = false;
    LstConfig lst;
};

/// Split, degrade the test images with additive noise, extract features,
/// classify with k-NN; returns the fraction of correct predictions.
double accuracy_experiment(const LabeledDataset& dataset,
                           const ExperimentOptions& options);

/// Exhaustive-pair AUC: probability that a random genuine score is smaller
/// than a random impostor score, ties counting one half.
double auc_from_scores(const std::vector<double>& genuine,
                       const std::vector<double>& impostor);

/// Verification AUC over the split: each test sample contributes its nearest
/// same-class and nearest different-class training distances as the genuine
/// and impostor scores. Honours options.noise_pct on the test images.
double roc_auc(const LabeledDataset& dataset, const ExperimentOptions& options);

/// Synthetic stand-in for licensed face data: each class is a sinusoidal
/// grating with a class-specific frequency and orientation; samples vary in
/// phase and carry additive noise. Pixels are quantized to [0, 255] integers
/// so the in-memory dataset equals its PGM round-trip. Deterministic.
LabeledDataset make_texture_dataset(int classes, int per_class, int size,
                                    std::uint64_t seed);

/// Write a dataset in the ingest layout (`root/<label>/img_NNN.pgm`).
void write_dataset(const LabeledDataset& dataset,
                   const std::filesystem::path& root);

}  // namespace ssg
