// Copyright 2026 The seqprod Authors
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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqprod/suites.hpp"

namespace seqprod {

enum class ReportFormat { text, json };

/// Throws ParseError for anything but "text" or "json".
ReportFormat report_format_from_string(std::string_view name);

/// Text: one table row per suite (suite, status, cases, claim) followed by
/// notes. JSON: an array of SuiteReport objects.
std::string render_report(const std::vector<SuiteReport>& reports, ReportFormat format);

/// Writes render_report to path, or to standard output when path is empty.
/// Throws IoError.
void emit_report(const std::vector<SuiteReport>& reports, ReportFormat format,
                 const std::optional<std::string>& path = std::nullopt);

}  // namespace seqprod
