#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acovdiff/montecarlo.hpp"

namespace acovdiff::config {

/// Minimal sectioned key-value format used for scenario files:
///
///   # comment
///   [section]
///   key = value
///   list = 0 10 0 1            # whitespace- or comma-separated
///
/// Section names may repeat (e.g. several [estimator] blocks); keys within
/// one section block may not.
struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    bool has(const std::string& key) const;
    const std::string& raw(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::string get_string_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    long get_long(const std::string& key) const;
    std::vector<double> get_doubles(const std::string& key) const;
    std::vector<long> get_longs(const std::string& key) const;
};

struct Document {
    std::vector<Section> sections;

    /// First section with this name; throws if absent.
    const Section& require(const std::string& name) const;
    const Section* find(const std::string& name) const;
    std::vector<const Section*> all(const std::string& name) const;
};

Document parse(const std::string& text);
Document parse_file(const std::string& path);

/// Signal described by a [signal] section: either `preset = six-jump` /
/// `preset = none`, or explicit `levels` and `breakpoints` arrays.
StepSignal load_signal(const Section& section);
SmoothComponent load_smooth(const Section& section);
ErrorModel load_noise(const Section& section);
mc::EstimatorConfig load_estimator(const Section& section);

/// Full experiment: [signal], [noise], [experiment] and one or more
/// [estimator] sections. A missing seed defaults to 1 (callers echo the
/// effective value).
mc::ExperimentSpec load_experiment(const Document& doc);

}  // namespace acovdiff::config
