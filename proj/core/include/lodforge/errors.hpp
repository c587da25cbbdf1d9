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

#include <stdexcept>
#include <string>

namespace lodforge {

/// Fatal syntax error in an input document. Carries the position at which
/// parsing stopped: a byte offset into the (decompressed) stream plus
/// line/column when the format is line-oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, long long byte_offset, int line = 0, int column = 0)
        : std::runtime_error(message + " (byte " + std::to_string(byte_offset)
                             + (line > 0 ? ", line " + std::to_string(line) + ":" + std::to_string(column) : "")
                             + ")"),
          byte_offset_(byte_offset),
          line_(line),
          column_(column) {}

    long long byte_offset() const { return byte_offset_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    long long byte_offset_;
    int line_;
    int column_;
};

/// Invalid configuration: bad value, unknown key, missing required setting.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

/// Filesystem failure, always keyed by the offending path.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& message, const std::string& path)
        : std::runtime_error(message + ": " + path), path_(path) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Raised when a query uses a construct outside the supported pattern
/// language or projects a variable bound by no pattern.
class QueryError : public std::runtime_error {
public:
    explicit QueryError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace lodforge
