#ifndef NMQT_CLI_CONFIG_HPP
#define NMQT_CLI_CONFIG_HPP

#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmqt::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Key-value configuration with dotted section keys.  Sources stack in
/// priority order: config file, then --set overrides, then dedicated flags
/// (--seed, --out, ...); later sources win.  Every key carries its origin
/// (file:line or flag) so errors point at the offending location, and every
/// value consulted by a command is recorded with its effective setting for
/// the output header echo.
class Config {
  public:
    void load_file(const std::string& path);
    void apply_override(const std::string& key_value, const std::string& origin);
    void set(const std::string& key, const std::string& value, const std::string& origin);

    /// Rejects keys outside the known registry, reporting their origin.
    void validate_keys() const;

    bool has(const std::string& key) const;

    double number(const std::string& key) const;
    double number_or(const std::string& key, double fallback) const;
    long integer(const std::string& key) const;
    long integer_or(const std::string& key, long fallback) const;
    /// Like integer_or but kept out of the header echo; for execution details
    /// (thread counts) that must not affect byte-reproducible output.
    long integer_or_silent(const std::string& key, long fallback) const;
    unsigned long long seed_or(const std::string& key, unsigned long long fallback) const;
    std::string text_or(const std::string& key, const std::string& fallback) const;
    std::string choice_or(const std::string& key,
                          std::initializer_list<const char*> allowed,
                          const std::string& fallback) const;

    /// Echo-only derived quantity (printed under the header's derived block).
    void note_derived(const std::string& key, double value) const;
    void note_derived_text(const std::string& key, const std::string& value) const;

    const std::map<std::string, std::string>& resolved() const { return resolved_; }
    const std::map<std::string, std::string>& derived() const { return derived_; }

    static const std::vector<std::string>& known_keys();

  private:
    struct Entry {
        std::string value;
        std::string origin;
    };

    const Entry* find(const std::string& key) const;
    double parse_number(const Entry& e, const std::string& key) const;

    std::map<std::string, Entry> values_;
    mutable std::map<std::string, std::string> resolved_;
    mutable std::map<std::string, std::string> derived_;
};

/// Shortest round-trip decimal form of v (std::to_chars).
std::string fmt_double(double v);

}  // namespace nmqt::cli

#endif
