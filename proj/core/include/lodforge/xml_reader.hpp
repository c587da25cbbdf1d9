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

#include <deque>
#include <istream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lodforge::xml {

/// One pull event. Element names are split into namespace URI and local name;
/// `ns` is empty for unqualified elements. Text events carry coalesced
/// character data between tags.
struct Event {
    enum class Type { StartElement, EndElement, Text, EndOfDocument };
    Type type = Type::EndOfDocument;
    std::string ns;
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;  // local name -> value
    std::string text;
};

/// Streaming pull parser over expat. Input may be gzip-compressed (detected
/// by the 1f 8b magic); byte offsets then refer to the decompressed stream.
/// Only UTF-8 (and its ASCII subset) input is accepted; any other declared
/// encoding is a fatal ParseError.
class Reader {
public:
    explicit Reader(std::istream& in);
    ~Reader();

    Reader(const Reader&) = delete;
    Reader& operator=(const Reader&) = delete;

    /// Next event; EndOfDocument exactly once at the end. Throws ParseError
    /// on malformed input, with the byte offset where parsing stopped.
    Event next();

    long long byte_offset() const;
    int line() const;
    int column() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Attribute lookup by local name; empty string when absent.
std::string attribute(const Event& event, const std::string& name);

}  // namespace lodforge::xml
