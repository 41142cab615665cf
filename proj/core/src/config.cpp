#include "superq/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace superq {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

ConfigFile ConfigFile::parse_string(const std::string& text) {
    ConfigFile cf;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ConfigError("unterminated section header", lineno);
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty()) throw ConfigError("empty section name", lineno);
            cf.sections[section];
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value'", lineno);
        if (section.empty()) throw ConfigError("entry before any [section] header", lineno);
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", lineno);
        cf.sections[section].emplace(key, Entry{value, lineno});
    }
    return cf;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream body;
    body << f.rdbuf();
    return parse_string(body.str());
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
    auto s = sections.find(section);
    return s != sections.end() && s->second.count(key) > 0;
}

std::optional<ConfigFile::Entry> ConfigFile::get(const std::string& section,
                                                 const std::string& key) const {
    auto s = sections.find(section);
    if (s == sections.end()) return std::nullopt;
    auto it = s->second.find(key);
    if (it == s->second.end()) return std::nullopt;
    if (s->second.count(key) > 1)
        throw ConfigError("duplicate key '" + key + "' in [" + section + "]", it->second.line);
    return it->second;
}

std::vector<ConfigFile::Entry> ConfigFile::get_all(const std::string& section,
                                                   const std::string& key) const {
    std::vector<Entry> out;
    auto s = sections.find(section);
    if (s == sections.end()) return out;
    auto range = s->second.equal_range(key);
    for (auto it = range.first; it != range.second; ++it) out.push_back(it->second);
    return out;
}

namespace {

int parse_int(const ConfigFile::Entry& e, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("malformed integer for " + what + ": '" + e.value + "'", e.line);
    }
}

Rat parse_rat(const ConfigFile::Entry& e, const std::string& what) {
    try {
        return rat_from_string(e.value);
    } catch (const std::exception& ex) {
        throw ConfigError("malformed rational for " + what + ": " + ex.what(), e.line);
    }
}

Vec parse_vec(const ConfigFile::Entry& e, const std::string& what) {
    try {
        return vec_from_string(e.value);
    } catch (const std::exception& ex) {
        throw ConfigError("malformed vector for " + what + ": " + ex.what(), e.line);
    }
}

double parse_double(const ConfigFile::Entry& e, const std::string& what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("malformed number for " + what + ": '" + e.value + "'", e.line);
    }
}

void check_known_keys(const ConfigFile& cf) {
    static const std::map<std::string, std::set<std::string>> known = {
        {"algebra", {"family", "m", "n", "alpha"}},
        {"realform", {"tag"}},
        {"possys", {"functional"}},
        {"cell", {"R"}},
        {"potential", {"term", "quad_row"}},
        {"box", {"n"}},
        {"lattice", {"den"}},
        {"solver", {"tol", "max_iter", "divergence"}},
        {"query", {"weight"}},
        {"unitarity", {"family", "m", "n", "mu", "lambda", "a", "b"}},
        {"atlas", {"slice", "scale"}},
    };
    for (const auto& [name, entries] : cf.sections) {
        auto it = known.find(name);
        if (it == known.end()) {
            int line = entries.empty() ? 0 : entries.begin()->second.line;
            throw ConfigError("unknown section [" + name + "]", line);
        }
        for (const auto& [key, entry] : entries)
            if (!it->second.count(key))
                throw ConfigError("unknown key '" + key + "' in [" + name + "]", entry.line);
    }
}

JobConfig from_config_file(const ConfigFile& cf) {
    check_known_keys(cf);
    JobConfig job;

    auto family = cf.get("algebra", "family");
    if (!family) throw ConfigError("missing [algebra] family");
    try {
        job.algebra.family = family_from_string(family->value);
    } catch (const Error& e) {
        throw ConfigError(e.what(), family->line);
    }
    if (auto m = cf.get("algebra", "m")) job.algebra.m = parse_int(*m, "[algebra] m");
    if (auto n = cf.get("algebra", "n")) job.algebra.n = parse_int(*n, "[algebra] n");
    if (auto alpha = cf.get("algebra", "alpha"))
        job.algebra.alpha = parse_rat(*alpha, "[algebra] alpha");
    try {
        job.algebra.validate();
    } catch (const Error& e) {
        throw ConfigError(e.what(), family->line);
    }

    if (auto tag = cf.get("realform", "tag")) job.realform_tag = tag->value;

    if (auto f = cf.get("possys", "functional")) {
        if (f->value != "auto") job.functional = parse_vec(*f, "[possys] functional");
    }

    if (auto r = cf.get("cell", "R")) {
        if (!trim(r->value).empty()) {
            Vec v = parse_vec(*r, "[cell] R");
            for (const Rat& x : v) {
                if (denominator(x) != 1 || x < 0)
                    throw ConfigError("cell R indices must be nonnegative integers", r->line);
                job.cell_R.push_back(static_cast<int>(numerator(x).convert_to<long>()));
            }
        }
    }

    auto terms = cf.get_all("potential", "term");
    auto quad_rows = cf.get_all("potential", "quad_row");
    if (!terms.empty() || !quad_rows.empty()) {
        PotentialSpec spec;
        for (const auto& t : terms) {
            auto colon = t.value.find(':');
            if (colon == std::string::npos)
                throw ConfigError("potential term must look like 'coeff : w1,w2,...'", t.line);
            Rat c = parse_rat({trim(t.value.substr(0, colon)), t.line}, "potential coefficient");
            Vec w = parse_vec({trim(t.value.substr(colon + 1)), t.line}, "potential weight");
            if (c <= 0) throw ConfigError("potential coefficients must be positive", t.line);
            spec.terms.emplace_back(c, w);
        }
        if (!quad_rows.empty()) {
            Mat q;
            for (const auto& row : quad_rows) q.push_back(parse_vec(row, "potential quad_row"));
            for (const Vec& row : q)
                if (row.size() != q.size())
                    throw ConfigError("quad_row block must be square", quad_rows[0].line);
            spec.quad = q;
        }
        job.potential = std::move(spec);
    }

    if (auto b = cf.get("box", "n")) {
        job.box = parse_int(*b, "[box] n");
        if (job.box < 0) throw ConfigError("[box] n must be nonnegative", b->line);
    }
    if (auto den = cf.get("lattice", "den")) {
        job.lattice_den = parse_int(*den, "[lattice] den");
        if (job.lattice_den < 1) throw ConfigError("[lattice] den must be >= 1", den->line);
    }
    if (auto tol = cf.get("solver", "tol")) {
        job.solver.tol = parse_double(*tol, "[solver] tol");
        if (!(job.solver.tol > 0)) throw ConfigError("[solver] tol must be positive", tol->line);
    }
    if (auto mi = cf.get("solver", "max_iter")) {
        job.solver.max_iter = parse_int(*mi, "[solver] max_iter");
        if (job.solver.max_iter < 1) throw ConfigError("[solver] max_iter must be >= 1", mi->line);
    }
    if (auto dv = cf.get("solver", "divergence"))
        job.solver.divergence_radius = parse_double(*dv, "[solver] divergence");

    if (auto w = cf.get("query", "weight")) job.query_weight = parse_vec(*w, "[query] weight");

    if (cf.sections.count("unitarity")) {
        UnitaritySpec u;
        auto fam = cf.get("unitarity", "family");
        if (!fam) throw ConfigError("missing [unitarity] family");
        if (fam->value == "B") {
            u.is_exception = false;
            auto m = cf.get("unitarity", "m"), n = cf.get("unitarity", "n");
            if (!m || !n) throw ConfigError("[unitarity] family B needs m and n", fam->line);
            u.osp.m = parse_int(*m, "[unitarity] m");
            u.osp.n = parse_int(*n, "[unitarity] n");
            if (auto mu = cf.get("unitarity", "mu")) u.osp.mu = parse_vec(*mu, "[unitarity] mu");
            if (auto l = cf.get("unitarity", "lambda"))
                u.osp.lambda = parse_rat(*l, "[unitarity] lambda");
            if (auto a = cf.get("unitarity", "a")) u.osp.a = parse_vec(*a, "[unitarity] a");
            try {
                u.osp.validate();
            } catch (const std::exception& e) {
                throw ConfigError(e.what(), fam->line);
            }
        } else if (fam->value == "G3" || fam->value == "F4") {
            u.is_exception = true;
            u.exception_family = fam->value == "G3" ? ExceptionFamily::G3 : ExceptionFamily::F4;
            if (auto a = cf.get("unitarity", "a")) u.a = parse_rat(*a, "[unitarity] a");
            if (auto b = cf.get("unitarity", "b")) u.b = parse_rat(*b, "[unitarity] b");
            if (auto mu = cf.get("unitarity", "mu")) u.mu = parse_rat(*mu, "[unitarity] mu");
        } else {
            throw ConfigError("unsupported [unitarity] family '" + fam->value + "'", fam->line);
        }
        job.unitarity = std::move(u);
    }

    if (auto s = cf.get("atlas", "slice")) {
        std::string v = s->value;
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            auto semi = v.find(';', start);
            parts.push_back(v.substr(start, semi == std::string::npos ? semi : semi - start));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (parts.size() != 3)
            throw ConfigError("atlas slice must be 'v1 ; v2 ; origin'", s->line);
        SliceSpec slice;
        slice.v1 = parse_vec({trim(parts[0]), s->line}, "slice v1");
        slice.v2 = parse_vec({trim(parts[1]), s->line}, "slice v2");
        slice.origin = parse_vec({trim(parts[2]), s->line}, "slice origin");
        job.slice = std::move(slice);
    }
    if (auto sc = cf.get("atlas", "scale")) job.atlas_scale = parse_double(*sc, "[atlas] scale");

    return job;
}

}  // namespace

JobConfig load_job_config(const std::string& path) {
    return from_config_file(ConfigFile::parse_file(path));
}

JobConfig job_config_from_string(const std::string& text) {
    return from_config_file(ConfigFile::parse_string(text));
}

}  // namespace superq
