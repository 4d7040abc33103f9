#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace nmqt::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool valid_key(const std::string& key) {
    if (key.empty()) return false;
    return std::all_of(key.begin(), key.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.';
    });
}

}  // namespace

std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

const std::vector<std::string>& Config::known_keys() {
    static const std::vector<std::string> keys = {
        "physics.x",        "physics.c",       "physics.lambda",  "physics.tau",
        "physics.e",        "physics.gamma",   "physics.d0",      "physics.omega0",
        "dynamics.dt",      "dynamics.t_final", "dynamics.delta", "dynamics.rabi",
        "initial.alpha_re", "initial.alpha_im", "initial.beta_re", "initial.beta_im",
        "homodyne.phi",
        "ensemble.n",       "ensemble.seed",   "ensemble.samples", "ensemble.threads",
        "ensemble.z_threshold",
        "run.kind",
        "amplitude.solver",
        "volterra.h",
        "rate.x_min",       "rate.x_max",      "rate.points",     "rate.dt",
        "zeno.k",           "zeno.t",          "zeno.n_min",      "zeno.doublings",
        "output.path",
    };
    return keys;
}

void Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        std::ostringstream origin;
        origin << path << ":" << lineno;
        if (eq == std::string::npos)
            throw ConfigError(origin.str() + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!valid_key(key))
            throw ConfigError(origin.str() + ": invalid key '" + key + "'");
        if (value.empty())
            throw ConfigError(origin.str() + ": empty value for '" + key + "'");
        set(key, value, origin.str());
    }
}

void Config::apply_override(const std::string& key_value, const std::string& origin) {
    const auto eq = key_value.find('=');
    if (eq == std::string::npos)
        throw ConfigError(origin + ": expected key=value, got '" + key_value + "'");
    const std::string key = trim(key_value.substr(0, eq));
    const std::string value = trim(key_value.substr(eq + 1));
    if (!valid_key(key)) throw ConfigError(origin + ": invalid key '" + key + "'");
    if (value.empty()) throw ConfigError(origin + ": empty value for '" + key + "'");
    set(key, value, origin);
}

void Config::set(const std::string& key, const std::string& value,
                 const std::string& origin) {
    values_[key] = Entry{value, origin};
}

void Config::validate_keys() const {
    const auto& known = known_keys();
    for (const auto& [key, entry] : values_) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError(entry.origin + ": unknown config key '" + key + "'");
    }
}

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

const Config::Entry* Config::find(const std::string& key) const {
    const auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
}

double Config::parse_number(const Entry& e, const std::string& key) const {
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    double out = 0.0;
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError(e.origin + ": '" + key + "' is not a number: '" + e.value + "'");
    return out;
}

double Config::number(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) throw ConfigError("missing required config key '" + key + "'");
    const double v = parse_number(*e, key);
    resolved_[key] = fmt_double(v);
    return v;
}

double Config::number_or(const std::string& key, double fallback) const {
    const Entry* e = find(key);
    const double v = e ? parse_number(*e, key) : fallback;
    resolved_[key] = fmt_double(v);
    return v;
}

long Config::integer(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) throw ConfigError("missing required config key '" + key + "'");
    const double v = parse_number(*e, key);
    const long n = static_cast<long>(v);
    if (static_cast<double>(n) != v)
        throw ConfigError(e->origin + ": '" + key + "' must be an integer");
    resolved_[key] = std::to_string(n);
    return n;
}

long Config::integer_or(const std::string& key, long fallback) const {
    if (!has(key)) {
        resolved_[key] = std::to_string(fallback);
        return fallback;
    }
    return integer(key);
}

long Config::integer_or_silent(const std::string& key, long fallback) const {
    const long v = integer_or(key, fallback);
    resolved_.erase(key);
    return v;
}

unsigned long long Config::seed_or(const std::string& key,
                                   unsigned long long fallback) const {
    const Entry* e = find(key);
    unsigned long long v = fallback;
    if (e) {
        const char* first = e->value.data();
        const char* last = first + e->value.size();
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc{} || res.ptr != last)
            throw ConfigError(e->origin + ": '" + key + "' is not a nonnegative integer");
    }
    resolved_[key] = std::to_string(v);
    return v;
}

std::string Config::text_or(const std::string& key, const std::string& fallback) const {
    const Entry* e = find(key);
    const std::string v = e ? e->value : fallback;
    resolved_[key] = v;
    return v;
}

std::string Config::choice_or(const std::string& key,
                              std::initializer_list<const char*> allowed,
                              const std::string& fallback) const {
    const Entry* e = find(key);
    const std::string v = e ? e->value : fallback;
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return v == a; }) == allowed.end()) {
        std::ostringstream msg;
        msg << (e ? e->origin : std::string("<default>")) << ": '" << key
            << "' must be one of {";
        bool first = true;
        for (const char* a : allowed) {
            if (!first) msg << ", ";
            msg << a;
            first = false;
        }
        msg << "}, got '" << v << "'";
        throw ConfigError(msg.str());
    }
    resolved_[key] = v;
    return v;
}

void Config::note_derived(const std::string& key, double value) const {
    derived_[key] = fmt_double(value);
}

void Config::note_derived_text(const std::string& key, const std::string& value) const {
    derived_[key] = value;
}

}  // namespace nmqt::cli
