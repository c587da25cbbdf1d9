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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lodforge::strings {

std::string trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);
std::string collapse_whitespace(std::string_view s);
bool contains_whitespace(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

/// True when the bytes form valid UTF-8.
bool is_valid_utf8(std::string_view s);

/// Best-effort NFC over the Latin range: combining marks U+0300..U+0327
/// following an ASCII base letter are composed into the precomposed
/// codepoint where one exists. Other sequences pass through unchanged.
std::string compose_latin(std::string_view s);

/// Fold a label for comparison: compose, strip diacritics over the Latin-1
/// and Latin Extended-A blocks, ASCII case-fold, collapse whitespace runs,
/// and strip terminal `.,;:` punctuation.
std::string fold_label(std::string_view s);

/// Life-date span of the form `\d{3,4}-\d{0,4}` (e.g. "1850-1894", "1850-").
/// Returns the matched span when present anywhere in the string.
std::optional<std::string> extract_life_dates(std::string_view s);

/// The label with any life-date span (plus surrounding separators) removed.
std::string strip_life_dates(std::string_view s);

/// Path slug: compose, lowercase, whitespace runs to single hyphens, then
/// percent-encode anything left that is not unreserved or a hyphen.
std::string slugify(std::string_view s);

/// Percent-encode for an IRI path segment. Keeps unreserved characters,
/// sub-delims, ':' and '@' (RFC 3987 pchar) plus '/' when `keep_slash`.
std::string percent_encode_path(std::string_view s, bool keep_slash = false);

/// An IRI is treated as absolute when it starts with scheme ':' per RFC 3987
/// (ALPHA *(ALPHA / DIGIT / '+' / '-' / '.')).
bool is_absolute_iri(std::string_view s);

/// Escapes ECMAScript regex metacharacters.
std::string regex_escape(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

/// Replaces the single `{placeholder}` in a template. Throws ConfigError if
/// the template does not contain exactly one placeholder.
std::string fill_template(std::string_view tmpl, std::string_view value);

/// Lexical checks used to decide whether a date literal gets a datatype.
bool is_xsd_date(std::string_view s);   // YYYY-MM-DD
bool is_xsd_gyear(std::string_view s);  // YYYY (3-4 digits allowed per xsd with leading zeros; we require 4)
bool is_integer(std::string_view s);

}  // namespace lodforge::strings
