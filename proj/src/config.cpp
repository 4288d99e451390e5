#include "acovdiff/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace acovdiff::config {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> parts;
    std::string token;
    for (char c : value) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!token.empty()) parts.push_back(token);
            token.clear();
        } else {
            token.push_back(c);
        }
    }
    if (!token.empty()) parts.push_back(token);
    return parts;
}

double to_double(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: value of '" + key + "' is not numeric: " + text);
    }
    if (used != text.size()) {
        throw std::invalid_argument("config: value of '" + key + "' is not numeric: " + text);
    }
    return value;
}

long to_long(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: value of '" + key + "' is not an integer: " + text);
    }
    if (used != text.size()) {
        throw std::invalid_argument("config: value of '" + key + "' is not an integer: " + text);
    }
    return value;
}

}  // namespace

bool Section::has(const std::string& key) const {
    for (const auto& [k, v] : entries) {
        if (k == key) return true;
    }
    return false;
}

const std::string& Section::raw(const std::string& key) const {
    for (const auto& [k, v] : entries) {
        if (k == key) return v;
    }
    throw std::invalid_argument("config: section [" + name + "] is missing key '" + key + "'");
}

std::string Section::get_string(const std::string& key) const { return raw(key); }

std::string Section::get_string_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? raw(key) : fallback;
}

double Section::get_double(const std::string& key) const { return to_double(key, raw(key)); }

long Section::get_long(const std::string& key) const { return to_long(key, raw(key)); }

std::vector<double> Section::get_doubles(const std::string& key) const {
    std::vector<double> out;
    for (const auto& part : split_list(raw(key))) out.push_back(to_double(key, part));
    return out;
}

std::vector<long> Section::get_longs(const std::string& key) const {
    std::vector<long> out;
    for (const auto& part : split_list(raw(key))) out.push_back(to_long(key, part));
    return out;
}

const Section& Document::require(const std::string& name) const {
    if (const Section* s = find(name)) return *s;
    throw std::invalid_argument("config: missing [" + name + "] section");
}

const Section* Document::find(const std::string& name) const {
    for (const auto& s : sections) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

std::vector<const Section*> Document::all(const std::string& name) const {
    std::vector<const Section*> out;
    for (const auto& s : sections) {
        if (s.name == name) out.push_back(&s);
    }
    return out;
}

Document parse(const std::string& text) {
    Document doc;
    Section* current = nullptr;
    std::istringstream stream(text);
    std::string line;
    long line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw std::invalid_argument("config: malformed section header at line " +
                                            std::to_string(line_no));
            }
            doc.sections.push_back({trim(line.substr(1, line.size() - 2)), {}});
            current = &doc.sections.back();
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos || current == nullptr) {
            throw std::invalid_argument("config: expected 'key = value' at line " +
                                        std::to_string(line_no));
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw std::invalid_argument("config: empty key at line " + std::to_string(line_no));
        }
        if (current->has(key)) {
            throw std::invalid_argument("config: duplicate key '" + key + "' in [" +
                                        current->name + "]");
        }
        current->entries.emplace_back(key, value);
    }
    return doc;
}

Document parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

StepSignal load_signal(const Section& section) {
    if (section.has("preset")) {
        const std::string preset = section.get_string("preset");
        if (preset == "six-jump") return six_jump_signal();
        if (preset == "none") return StepSignal({0.0}, {0.0, 1.0});
        throw std::invalid_argument("config: unknown signal preset '" + preset +
                                    "' (expected six-jump or none)");
    }
    return StepSignal(section.get_doubles("levels"), section.get_doubles("breakpoints"));
}

SmoothComponent load_smooth(const Section& section) {
    return SmoothComponent::by_name(section.get_string_or("smooth", "zero"));
}

ErrorModel load_noise(const Section& section) {
    const std::string model = section.get_string("model");
    if (model == "ma1") {
        const std::string innovation = section.get_string_or("innovation", "gaussian");
        Innovation kind;
        if (innovation == "gaussian") {
            kind = Innovation::Gaussian;
        } else if (innovation == "t4") {
            kind = Innovation::StudentT4;
        } else {
            throw std::invalid_argument("config: unknown innovation '" + innovation +
                                        "' (expected gaussian or t4)");
        }
        return ErrorModel::ma1(section.get_double("gamma1"), kind);
    }
    if (model == "ar1") return ErrorModel::ar1(section.get_double("phi"));
    throw std::invalid_argument("config: unknown noise model '" + model +
                                "' (expected ma1 or ar1)");
}

mc::EstimatorConfig load_estimator(const Section& section) {
    const std::string method = section.get_string("method");
    if (method == "difference") {
        double d0 = 1.0, d1 = -1.0;
        if (section.has("d0")) d0 = section.get_double("d0");
        if (section.has("d1")) d1 = section.get_double("d1");
        return mc::EstimatorConfig::difference(section.get_long("m"), d0, d1);
    }
    if (method == "hvk") return mc::EstimatorConfig::hvk(section.get_long("maxlag"));
    throw std::invalid_argument("config: unknown estimator method '" + method +
                                "' (expected difference or hvk)");
}

mc::ExperimentSpec load_experiment(const Document& doc) {
    const Section& signal = doc.require("signal");
    const Section& noise = doc.require("noise");
    const Section& experiment = doc.require("experiment");
    const auto estimator_sections = doc.all("estimator");
    if (estimator_sections.empty()) {
        throw std::invalid_argument("config: at least one [estimator] section required");
    }

    mc::ExperimentSpec spec{load_signal(signal),
                            load_smooth(signal),
                            load_noise(noise),
                            experiment.get_long("n"),
                            experiment.get_long("replications"),
                            experiment.has("seed")
                                ? static_cast<std::uint64_t>(experiment.get_long("seed"))
                                : 1,
                            experiment.get_longs("lags"),
                            {}};
    for (const Section* s : estimator_sections) spec.estimators.push_back(load_estimator(*s));
    return spec;
}

}  // namespace acovdiff::config
