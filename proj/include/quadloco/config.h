// Copyright 2026 The quadloco Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Flat key-value documents:
//
//   # comment
//   robot.total_mass = 14.0
//   trainer.hidden = 256 256
//
// Keys are dotted names, values run to the end of the line (trailing
// comments are stripped). Later duplicates override earlier ones.

#ifndef QUADLOCO_CONFIG_H_
#define QUADLOCO_CONFIG_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace quadloco {

class KeyValueConfig {
 public:
  static KeyValueConfig Parse(const std::string& text);
  static KeyValueConfig Load(const std::string& path);

  bool Has(const std::string& key) const;
  void Set(const std::string& key, const std::string& value);
  void SetDouble(const std::string& key, double value);

  // Each getter leaves `value` alone when the key is absent and throws
  // ConfigError when the text does not parse.
  void Get(const std::string& key, double& value) const;
  void Get(const std::string& key, int& value) const;
  void Get(const std::string& key, std::int64_t& value) const;
  void Get(const std::string& key, bool& value) const;
  void Get(const std::string& key, std::string& value) const;
  void Get(const std::string& key, std::vector<int>& value) const;
  void Get(const std::string& key, std::vector<double>& value) const;

  // Keys never read by a getter.
  std::vector<std::string> UnusedKeys() const;

  // Sorted `key = value` lines.
  std::string ToString() const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  const std::string* Find(const std::string& key) const;

  std::map<std::string, std::string> entries_;
  mutable std::set<std::string> used_;
};

// Shortest round-trip text of a double.
std::string FormatDouble(double value);

}  // namespace quadloco

#endif  // QUADLOCO_CONFIG_H_
