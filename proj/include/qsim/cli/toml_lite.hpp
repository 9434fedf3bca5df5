// Copyright 2026 The qsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string_view>

#include <json.hpp>

// Reader for the TOML subset used by experiment files: comments, [tables]
// and [dotted.tables], bare/quoted/dotted keys, basic and literal strings,
// integers, floats (including inf/nan), booleans, multi-line arrays and
// inline tables. Dates and array-of-tables are rejected.

namespace qsim::cli {

/// Parses a document into a JSON object. Throws ValidationError with the
/// line number on malformed input or duplicate keys.
nlohmann::json parse_toml(std::string_view text);

/// Parses a single TOML value (as in `key = value`). Text that is not a valid
/// value is returned as a string, so `--set name=g-signal` needs no quotes.
nlohmann::json parse_toml_value(std::string_view text);

}  // namespace qsim::cli
