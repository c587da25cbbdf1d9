/**
Copyright 2026 The lodforge authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
 */
#pragma once

#include <string>

namespace lodforge::fs {

/// Directory holding the shipped data files (vocabulary tables, rule sets,
/// audit defaults). Resolution order: $LODFORGE_DATA_DIR, the source tree,
/// the install prefix.
std::string data_dir();

/// Absolute path of a shipped data file.
std::string data_file(const std::string& relative);

std::string read_file(const std::string& path);               // throws IoError
void write_file(const std::string& path, const std::string& content);

}  // namespace lodforge::fs
