#include "ssg/recognize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "ssg/errors.hpp"
#include "ssg/io.hpp"
#include "ssg/methods.hpp"
#include "ssg/synthbench.hpp"

namespace ssg {

namespace {

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

// Features for one dataset; noise (if any) is applied per image with a
// sub-seed derived from (seed, image index).
std::vector<FeatureVector> featurize(const LabeledDataset& ds,
                                     const ExperimentOptions& opt,
                                     double noise_pct, std::uint64_t seed) {
    std::vector<FeatureVector> out;
    out.reserve(ds.samples.size());
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        const LabeledSample& s = ds.samples[i];
        const Image img = noise_pct > 0.0
                              ? add_noise(s.image, noise_pct, mix_seed(seed, i))
                              : s.image;
        FeatureVector fv = extract_features(img, opt.method, opt.downsample, opt.lst);
        fv.label = s.label;
        out.push_back(std::move(fv));
    }
    return out;
}

void shuffle_labels(std::vector<FeatureVector>& train, std::uint64_t seed) {
    std::vector<std::string> labels;
    labels.reserve(train.size());
    for (const FeatureVector& fv : train) labels.push_back(fv.label);
    std::mt19937_64 rng(mix_seed(seed, 0x5abe1));
    std::shuffle(labels.begin(), labels.end(), rng);
    for (std::size_t i = 0; i < train.size(); ++i) train[i].label = labels[i];
}

}  // namespace

std::vector<std::string> LabeledDataset::class_labels() const {
    std::vector<std::string> labels;
    for (const LabeledSample& s : samples) labels.push_back(s.label);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

LabeledDataset ingest_dataset(const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(root)) {
        throw IoFailure("dataset root is not a directory: " + root.string());
    }

    std::vector<fs::path> class_dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory()) class_dirs.push_back(entry.path());
    }
    std::sort(class_dirs.begin(), class_dirs.end());
    if (class_dirs.size() < 2) {
        throw InsufficientSamples("dataset needs >= 2 class directories under " +
                                  root.string());
    }

    LabeledDataset ds;
    for (const fs::path& dir : class_dirs) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        if (files.size() < 2) {
            throw EmptyClass("class directory needs >= 2 images: " + dir.string());
        }
        for (const fs::path& file : files) {
            try {
                ds.samples.push_back({dir.filename().string(), read_pgm(file)});
            } catch (const Error& e) {
                throw UnreadableImage("cannot read " + file.string() + ": " +
                                      e.what());
            }
        }
    }
    return ds;
}

FeatureVector extract_features(const Image& img, const std::string& method,
                               int downsample, const LstConfig& cfg) {
    if (downsample < 1) throw Error("downsample factor must be >= 1");
    const ResponseMap resp = apply_method(method, img, cfg);

    const int bw = resp.values.width() / downsample;
    const int bh = resp.values.height() / downsample;
    if (bw < 1 || bh < 1) {
        throw ImageTooSmall("image smaller than one downsample block");
    }
    // Center-crop to a multiple of the block size.
    const int x0 = (resp.values.width() - bw * downsample) / 2;
    const int y0 = (resp.values.height() - bh * downsample) / 2;

    FeatureVector fv;
    fv.values.reserve(static_cast<std::size_t>(bw) * bh);
    const double inv = 1.0 / (static_cast<double>(downsample) * downsample);
    for (int by = 0; by < bh; ++by) {
        for (int bx = 0; bx < bw; ++bx) {
            double acc = 0.0;
            for (int dy = 0; dy < downsample; ++dy) {
                for (int dx = 0; dx < downsample; ++dx) {
                    acc += resp.values.at(x0 + bx * downsample + dx,
                                          y0 + by * downsample + dy);
                }
            }
            fv.values.push_back(acc * inv);
        }
    }
    return fv;
}

std::string knn_classify(const std::vector<FeatureVector>& train,
                         const FeatureVector& test, int k) {
    if (train.empty()) throw Error("knn_classify: empty training set");
    if (k < 1) throw Error("knn_classify: k must be >= 1");
    for (const FeatureVector& fv : train) {
        if (fv.values.size() != test.values.size()) {
            throw DimensionMismatch(
                "feature dimension " + std::to_string(fv.values.size()) +
                " != query dimension " + std::to_string(test.values.size()));
        }
    }

    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) {
        dist.emplace_back(euclidean(train[i].values, test.values), i);
    }
    // Pairs order by (distance, training index): ties keep training order.
    std::sort(dist.begin(), dist.end());

    const std::size_t kk = std::min<std::size_t>(k, dist.size());
    std::map<std::string, std::pair<int, double>> votes;  // label -> (count, dist sum)
    for (std::size_t i = 0; i < kk; ++i) {
        auto& v = votes[train[dist[i].second].label];
        v.first += 1;
        v.second += dist[i].first;
    }

    // Majority vote; ties by smaller summed distance; std::map iteration
    // order settles any remaining tie by the smallest label.
    const std::string* best = nullptr;
    int best_count = -1;
    double best_sum = 0.0;
    for (const auto& [label, v] : votes) {
        if (v.first > best_count ||
            (v.first == best_count && v.second < best_sum)) {
            best = &label;
            best_count = v.first;
            best_sum = v.second;
        }
    }
    return *best;
}

SplitResult split(const LabeledDataset& dataset, double train_fraction,
                  std::uint64_t seed) {
    if (train_fraction <= 0.0 || train_fraction >= 1.0) {
        throw Error("train_fraction must lie in (0, 1)");
    }

    // Class-major index lists, classes in lexicographic order.
    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
        by_class[dataset.samples[i].label].push_back(i);
    }

    SplitResult result;
    std::mt19937_64 rng(seed);
    for (auto& [label, indices] : by_class) {
        std::shuffle(indices.begin(), indices.end(), rng);
        const std::size_t n_train = static_cast<std::size_t>(
            std::floor(train_fraction * static_cast<double>(indices.size())));
        if (n_train < 1 || n_train >= indices.size()) {
            throw InsufficientSamples(
                "class '" + label + "' with " + std::to_string(indices.size()) +
                " samples cannot honour train fraction " +
                std::to_string(train_fraction));
        }
        for (std::size_t i = 0; i < indices.size(); ++i) {
            auto& dst = i < n_train ? result.train : result.test;
            dst.samples.push_back(dataset.samples[indices[i]]);
        }
    }
    return result;
}

double accuracy_experiment(const LabeledDataset& dataset,
                           const ExperimentOptions& options) {
    const SplitResult parts = split(dataset, options.train_fraction, options.seed);
    std::vector<FeatureVector> train =
        featurize(parts.train, options, 0.0, options.seed);
    const std::vector<FeatureVector> test =
        featurize(parts.test, options, options.noise_pct, options.seed);
    if (options.shuffle_train_labels) shuffle_labels(train, options.seed);

    std::size_t correct = 0;
    for (const FeatureVector& query : test) {
        if (knn_classify(train, query, options.k) == query.label) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(test.size());
}

double auc_from_scores(const std::vector<double>& genuine,
                       const std::vector<double>& impostor) {
    if (genuine.empty() || impostor.empty()) {
        throw EmptyInput("auc_from_scores: empty score set");
    }
    double favourable = 0.0;
    for (double g : genuine) {
        for (double i : impostor) {
            if (g < i) favourable += 1.0;
            else if (g == i) favourable += 0.5;
        }
    }
    return favourable / (static_cast<double>(genuine.size()) *
                         static_cast<double>(impostor.size()));
}

double roc_auc(const LabeledDataset& dataset, const ExperimentOptions& options) {
    const SplitResult parts = split(dataset, options.train_fraction, options.seed);
    const std::vector<FeatureVector> train =
        featurize(parts.train, options, 0.0, options.seed);
    const std::vector<FeatureVector> test =
        featurize(parts.test, options, options.noise_pct, options.seed);

    std::vector<double> genuine;
    std::vector<double> impostor;
    for (const FeatureVector& query : test) {
        double best_same = std::numeric_limits<double>::infinity();
        double best_other = std::numeric_limits<double>::infinity();
        for (const FeatureVector& ref : train) {
            const double d = euclidean(ref.values, query.values);
            if (ref.label == query.label) best_same = std::min(best_same, d);
            else best_other = std::min(best_other, d);
        }
        genuine.push_back(best_same);
        impostor.push_back(best_other);
    }
    return auc_from_scores(genuine, impostor);
}

LabeledDataset make_texture_dataset(int classes, int per_class, int size,
                                    std::uint64_t seed) {
    if (classes < 2) throw Error("texture dataset needs >= 2 classes");
    if (per_class < 2) throw Error("texture dataset needs >= 2 samples per class");
    if (size < 16) throw Error("texture dataset image size must be >= 16");

    // High-contrast gratings reaching into the dark range, where the log
    // transform separates structure from additive noise most clearly.
    // Frequencies stay low enough to survive block-mean feature pooling.
    constexpr double kOffset = 100.0;
    constexpr double kContrast = 90.0;
    constexpr double kIntraNoise = 6.0;

    LabeledDataset ds;
    for (int c = 0; c < classes; ++c) {
        const double freq = 2.0 + c;
        const double theta = std::numbers::pi * c / classes;
        const double ux = std::cos(theta);
        const double uy = std::sin(theta);
        const std::string label = "class_" + std::to_string(c);

        for (int i = 0; i < per_class; ++i) {
            std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(c) * 1000 + i));
            std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * std::numbers::pi);
            std::normal_distribution<double> noise(0.0, kIntraNoise);
            const double phase = phase_dist(rng);

            Image img(size, size);
            for (int y = 0; y < size; ++y) {
                for (int x = 0; x < size; ++x) {
                    const double t = (x * ux + y * uy) / size;
                    double v = kOffset + kContrast *
                               std::sin(2.0 * std::numbers::pi * freq * t + phase);
                    v += noise(rng);
                    img.at(x, y) = std::clamp(std::floor(v + 0.5), 0.0, 255.0);
                }
            }
            ds.samples.push_back({label, std::move(img)});
        }
    }
    return ds;
}

void write_dataset(const LabeledDataset& dataset,
                   const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(root, ec);
    if (ec) throw IoFailure("cannot create " + root.string() + ": " + ec.message());

    std::map<std::string, int> counters;
    for (const LabeledSample& s : dataset.samples) {
        const fs::path dir = root / s.label;
        fs::create_directories(dir, ec);
        if (ec) throw IoFailure("cannot create " + dir.string() + ": " + ec.message());
        char name[32];
        std::snprintf(name, sizeof(name), "img_%03d.pgm", counters[s.label]++);
        write_pgm(s.image, dir / name, /*normalize=*/false);
    }
}

}  // namespace ssg
