#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace avcap {

// Ordered key=value store backing config files and the config block inside
// checkpoints. Lines are `key=value`; blank lines and lines starting with
// '#' are skipped. Insertion order is preserved so serialization is stable.
class KvConfig {
 public:
  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;

  std::string get_str(const std::string& key, const std::string& fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string serialize() const;
  static KvConfig parse(const std::string& text);
  static KvConfig load_file(const std::string& path);
  void save_file(const std::string& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string format_double(double v);  // shortest round-trip decimal

}  // namespace avcap
