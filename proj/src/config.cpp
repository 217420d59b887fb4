#include "a2g/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "a2g/errors.hpp"

namespace a2g {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

std::size_t levenshtein(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

struct Entry {
    std::string value;
    int line = 0;
};

// section name -> key -> entry
using Sections = std::map<std::string, std::map<std::string, Entry>>;

[[noreturn]] void fail_line(int line, const std::string& msg) {
    std::ostringstream out;
    out << "config line " << line << ": " << msg;
    throw ConfigError(out.str());
}

const std::map<std::string, std::vector<std::string>>& known_keys() {
    static const std::map<std::string, std::vector<std::string>> keys = {
        {"", {"output_path", "seed"}},
        {"environment", {"name", "a", "b", "eta_los_db", "eta_nlos_db"}},
        {"link", {"pt_dbm", "gt_dbi", "gr_dbi", "f_hz", "b_hz", "nf_db"}},
        {"pathloss", {"alpha", "model", "averaging"}},
        {"array", {"m", "phi_deg", "gain_model"}},
        {"sweep",
         {"kind", "start", "stop", "step", "fixed_altitude_m", "envs", "beam_on_off"}},
        {"coverage",
         {"users", "min_rate_bps", "region_a_m", "region_b_m", "uav_x_m", "uav_y_m",
          "uav_altitude_m", "phi_start_deg", "phi_stop_deg", "phi_step_deg"}},
    };
    return keys;
}

std::string section_label(const std::string& section) {
    return section.empty() ? "top level" : "section [" + section + "]";
}

void check_key_known(const std::string& section, const std::string& key, int line) {
    const auto& registry = known_keys();
    const auto it = registry.find(section);
    const std::vector<std::string>& valid = it->second;
    if (std::find(valid.begin(), valid.end(), key) != valid.end()) return;

    std::string nearest;
    std::size_t best = static_cast<std::size_t>(-1);
    for (const auto& [sec, keys] : registry) {
        for (const std::string& candidate : keys) {
            const std::size_t d = levenshtein(key, candidate);
            if (d < best) {
                best = d;
                nearest = candidate;
            }
        }
    }
    std::ostringstream msg;
    msg << "unknown key '" << key << "' in " << section_label(section) << "; nearest valid key is '"
        << nearest << "'";
    fail_line(line, msg.str());
}

Sections tokenize(const std::string& text) {
    Sections sections;
    std::istringstream stream(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    const auto& registry = known_keys();
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail_line(line_no, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (registry.find(section) == registry.end()) {
                fail_line(line_no, "unknown section [" + section + "]");
            }
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            fail_line(line_no, "expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail_line(line_no, "empty key");
        if (value.empty()) fail_line(line_no, "empty value for key '" + key + "'");
        check_key_known(section, key, line_no);
        auto [it, inserted] = sections[section].emplace(key, Entry{value, line_no});
        if (!inserted) {
            std::ostringstream msg;
            msg << "duplicate key '" << key << "' in " << section_label(section)
                << " (first defined at line " << it->second.line << ")";
            fail_line(line_no, msg.str());
        }
    }
    return sections;
}

double parse_double(const Entry& e, const std::string& key) {
    const char* begin = e.value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        fail_line(e.line, "key '" + key + "': not a number: '" + e.value + "'");
    }
    return v;
}

std::uint64_t parse_u64(const Entry& e, const std::string& key) {
    const char* begin = e.value.c_str();
    char* end = nullptr;
    const unsigned long long v = std::strtoull(begin, &end, 10);
    if (end == begin || *end != '\0' || e.value[0] == '-') {
        fail_line(e.line, "key '" + key + "': not a non-negative integer: '" + e.value + "'");
    }
    return v;
}

bool parse_bool(const Entry& e, const std::string& key) {
    if (e.value == "true") return true;
    if (e.value == "false") return false;
    fail_line(e.line, "key '" + key + "': expected true or false, got '" + e.value + "'");
}

template <typename T>
T parse_enum(const Entry& e, const std::string& key,
             const std::vector<std::pair<std::string, T>>& options) {
    for (const auto& [name, value] : options) {
        if (e.value == name) return value;
    }
    std::ostringstream msg;
    msg << "key '" << key << "': invalid value '" << e.value << "'; valid:";
    for (const auto& [name, value] : options) msg << " " << name;
    fail_line(e.line, msg.str());
}

std::vector<std::string> parse_name_list(const Entry& e, const std::string& key) {
    std::vector<std::string> names;
    std::string item;
    std::istringstream stream(e.value);
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (item.empty()) fail_line(e.line, "key '" + key + "': empty list entry");
        names.push_back(item);
    }
    if (names.empty()) fail_line(e.line, "key '" + key + "': empty list");
    return names;
}

// Fetch helper: applies fn when the key is present.
template <typename Fn>
void with(const std::map<std::string, Entry>& sec, const std::string& key, Fn&& fn) {
    const auto it = sec.find(key);
    if (it != sec.end()) fn(it->second);
}

void apply_environment(RunConfig& cfg, const std::map<std::string, Entry>& sec) {
    const bool has_params = sec.count("a") || sec.count("b") || sec.count("eta_los_db") ||
                            sec.count("eta_nlos_db");
    const auto name_it = sec.find("name");
    if (!has_params) {
        if (name_it != sec.end()) {
            cfg.environment = environment_preset(name_it->second.value);
        }
        return;
    }
    // Custom environment: all five fields, no partial preset edits.
    const char* required[] = {"name", "a", "b", "eta_los_db", "eta_nlos_db"};
    for (const char* key : required) {
        if (!sec.count(key)) {
            throw ConfigError(
                "custom environment must supply all five fields "
                "(name, a, b, eta_los_db, eta_nlos_db); missing '" +
                std::string(key) + "'");
        }
    }
    Environment env;
    env.name = name_it->second.value;
    for (const Environment& preset : environment_presets()) {
        if (preset.name == env.name) {
            throw ConfigError("custom environment must not reuse preset name '" + env.name +
                              "'");
        }
    }
    env.a = parse_double(sec.at("a"), "a");
    env.b = parse_double(sec.at("b"), "b");
    env.eta_los_db = parse_double(sec.at("eta_los_db"), "eta_los_db");
    env.eta_nlos_db = parse_double(sec.at("eta_nlos_db"), "eta_nlos_db");
    cfg.environment = validate(env);
    cfg.has_custom_environment = true;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    const Sections sections = tokenize(text);
    RunConfig cfg;

    const auto section = [&sections](const char* name) -> const std::map<std::string, Entry>& {
        static const std::map<std::string, Entry> empty;
        const auto it = sections.find(name);
        return it == sections.end() ? empty : it->second;
    };

    {
        const auto& top = section("");
        with(top, "output_path", [&](const Entry& e) { cfg.output_path = e.value; });
        with(top, "seed", [&](const Entry& e) { cfg.seed = parse_u64(e, "seed"); });
    }

    apply_environment(cfg, section("environment"));

    {
        const auto& link = section("link");
        with(link, "pt_dbm", [&](const Entry& e) { cfg.link.pt_dbm = parse_double(e, "pt_dbm"); });
        with(link, "gt_dbi", [&](const Entry& e) { cfg.link.gt_dbi = parse_double(e, "gt_dbi"); });
        with(link, "gr_dbi", [&](const Entry& e) { cfg.link.gr_dbi = parse_double(e, "gr_dbi"); });
        with(link, "f_hz", [&](const Entry& e) { cfg.link.f_hz = parse_double(e, "f_hz"); });
        with(link, "b_hz", [&](const Entry& e) { cfg.link.b_hz = parse_double(e, "b_hz"); });
        with(link, "nf_db", [&](const Entry& e) { cfg.link.nf_db = parse_double(e, "nf_db"); });
    }

    {
        const auto& pl = section("pathloss");
        with(pl, "alpha", [&](const Entry& e) { cfg.pathloss.alpha = parse_double(e, "alpha"); });
        with(pl, "model", [&](const Entry& e) {
            cfg.pathloss.model = parse_enum<PathLossModel>(
                e, "model",
                {{"exponent", PathLossModel::exponent}, {"fspl", PathLossModel::fspl}});
        });
        with(pl, "averaging", [&](const Entry& e) {
            cfg.pathloss.averaging = parse_enum<GainAveraging>(
                e, "averaging", {{"linear", GainAveraging::linear}, {"db", GainAveraging::db}});
        });
    }

    {
        const auto& arr = section("array");
        with(arr, "m", [&](const Entry& e) {
            const std::uint64_t m = parse_u64(e, "m");
            if (m == 0 || m > 1u << 20) fail_line(e.line, "key 'm': must be in [1, 2^20]");
            cfg.array.elements = static_cast<unsigned>(m);
        });
        with(arr, "phi_deg",
             [&](const Entry& e) { cfg.array.phi_deg = parse_double(e, "phi_deg"); });
        with(arr, "gain_model", [&](const Entry& e) {
            cfg.array.gain_model = parse_enum<GainModel>(
                e, "gain_model",
                {{"directivity", GainModel::directivity}, {"coherent", GainModel::coherent}});
        });
    }

    {
        const auto& sw = section("sweep");
        with(sw, "kind", [&](const Entry& e) {
            cfg.sweep_kind = parse_enum<SweepKind>(
                e, "kind",
                {{"plos_vs_elevation", SweepKind::plos_vs_elevation},
                 {"power_vs_distance", SweepKind::power_vs_distance}});
        });
        with(sw, "start", [&](const Entry& e) { cfg.sweep_start = parse_double(e, "start"); });
        with(sw, "stop", [&](const Entry& e) { cfg.sweep_stop = parse_double(e, "stop"); });
        with(sw, "step", [&](const Entry& e) { cfg.sweep_step = parse_double(e, "step"); });
        with(sw, "fixed_altitude_m", [&](const Entry& e) {
            cfg.fixed_altitude_m = parse_double(e, "fixed_altitude_m");
        });
        with(sw, "envs", [&](const Entry& e) { cfg.sweep_envs = parse_name_list(e, "envs"); });
        with(sw, "beam_on_off",
             [&](const Entry& e) { cfg.beam_on_off = parse_bool(e, "beam_on_off"); });
    }

    {
        const auto& cov = section("coverage");
        auto& c = cfg.coverage;
        with(cov, "users", [&](const Entry& e) {
            c.users = static_cast<std::size_t>(parse_u64(e, "users"));
        });
        with(cov, "min_rate_bps",
             [&](const Entry& e) { c.min_rate_bps = parse_double(e, "min_rate_bps"); });
        with(cov, "region_a_m",
             [&](const Entry& e) { c.region_a_m = parse_double(e, "region_a_m"); });
        with(cov, "region_b_m",
             [&](const Entry& e) { c.region_b_m = parse_double(e, "region_b_m"); });
        with(cov, "uav_x_m", [&](const Entry& e) { c.uav_x_m = parse_double(e, "uav_x_m"); });
        with(cov, "uav_y_m", [&](const Entry& e) { c.uav_y_m = parse_double(e, "uav_y_m"); });
        with(cov, "uav_altitude_m",
             [&](const Entry& e) { c.uav_altitude_m = parse_double(e, "uav_altitude_m"); });
        with(cov, "phi_start_deg",
             [&](const Entry& e) { c.phi_start_deg = parse_double(e, "phi_start_deg"); });
        with(cov, "phi_stop_deg",
             [&](const Entry& e) { c.phi_stop_deg = parse_double(e, "phi_stop_deg"); });
        with(cov, "phi_step_deg",
             [&](const Entry& e) { c.phi_step_deg = parse_double(e, "phi_step_deg"); });
    }

    // Validate everything up front; no computation sees an invalid value.
    validate(cfg.environment);
    validate(cfg.link);
    cfg.pathloss.f_hz = cfg.link.f_hz;
    validate(cfg.pathloss);
    validate(cfg.array);
    for (const std::string& name : cfg.sweep_envs) {
        resolve_environment(cfg, name);
    }
    const auto& c = cfg.coverage;
    if (!(c.min_rate_bps >= 0.0)) throw ConfigError("coverage.min_rate_bps must be >= 0");
    if (!(c.region_a_m > 0.0)) throw ConfigError("coverage.region_a_m must be > 0");
    if (!(c.region_b_m > 0.0)) throw ConfigError("coverage.region_b_m must be > 0");
    if (!(c.uav_altitude_m > 0.0)) throw ConfigError("coverage.uav_altitude_m must be > 0");
    if (!(c.phi_step_deg > 0.0)) throw ConfigError("coverage.phi_step_deg must be > 0");
    if (!(c.phi_start_deg <= c.phi_stop_deg)) {
        throw ConfigError("coverage.phi_start_deg must be <= phi_stop_deg");
    }
    if (c.phi_start_deg < -90.0 || c.phi_stop_deg > 90.0) {
        throw ConfigError("coverage steering grid must lie in [-90, 90]");
    }
    if (!(cfg.fixed_altitude_m > 0.0)) throw ConfigError("sweep.fixed_altitude_m must be > 0");
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream text;
    text << file.rdbuf();
    return parse_config(text.str());
}

const Environment& resolve_environment(const RunConfig& cfg, const std::string& name) {
    if (cfg.has_custom_environment && cfg.environment.name == name) {
        return cfg.environment;
    }
    return environment_preset(name);
}

}  // namespace a2g
