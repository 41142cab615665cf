#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superq/kahler.hpp"
#include "superq/realform.hpp"
#include "superq/rootdata.hpp"
#include "superq/unitarity.hpp"

namespace superq {

/// Line-oriented "[section]" / "key = value" file. Every entry remembers its
/// line for diagnostics; parsing is total or raises ConfigError.
struct ConfigFile {
    struct Entry {
        std::string value;
        int line = 0;
    };

    std::map<std::string, std::multimap<std::string, Entry>> sections;

    static ConfigFile parse_string(const std::string& text);
    static ConfigFile parse_file(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    std::optional<Entry> get(const std::string& section, const std::string& key) const;
    std::vector<Entry> get_all(const std::string& section, const std::string& key) const;
};

struct SliceSpec {
    Vec v1, v2, origin;
};

struct PotentialSpec {
    std::vector<std::pair<Rat, Vec>> terms;  // ambient weights
    std::optional<Mat> quad;                 // frame-coordinate block
};

struct UnitaritySpec {
    bool is_exception = false;  // true: G3/F4 exception thresholds
    JakobsenParamsOsp osp;
    ExceptionFamily exception_family = ExceptionFamily::G3;
    Rat a, b, mu;
};

/// Everything a job needs, validated and exact.
struct JobConfig {
    AlgebraSpec algebra;
    std::string realform_tag;
    std::optional<Vec> functional;       // nullopt = family default
    std::vector<int> cell_R;             // indices into the simple root list
    std::optional<PotentialSpec> potential;
    int box = 4;
    int lattice_den = 1;
    NewtonParams solver;
    std::optional<Vec> query_weight;
    std::optional<UnitaritySpec> unitarity;
    std::optional<SliceSpec> slice;
    double atlas_scale = 40.0;
};

JobConfig load_job_config(const std::string& path);
JobConfig job_config_from_string(const std::string& text);

}  // namespace superq
