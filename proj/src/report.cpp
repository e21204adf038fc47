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

#include "seqprod/report.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "seqprod/error.hpp"

namespace seqprod {

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  throw Error(ErrorKind::ParseError, "unknown report format '" + std::string(name) + "'");
}

std::string render_report(const std::vector<SuiteReport>& reports, ReportFormat format) {
  if (format == ReportFormat::json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::size_t name_width = 5;
  for (const auto& r : reports) name_width = std::max(name_width, r.suite.size());
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  out << pad("suite", name_width) << "  " << pad("status", 17) << "  " << pad("cases", 11)
      << "  claim\n";
  int passed = 0;
  for (const auto& r : reports) {
    const std::string cases = std::to_string(r.cases_passed) + "/" + std::to_string(r.cases_run);
    out << pad(r.suite, name_width) << "  " << pad(std::string(to_string(r.status)), 17) << "  "
        << pad(cases, 11) << "  " << r.paper_claim << "\n";
    if (r.ok()) ++passed;
  }
  for (const auto& r : reports) {
    if (r.notes.empty() && r.witnesses.empty()) continue;
    out << "\n[" << r.suite << "]\n";
    for (const auto& w : r.witnesses) {
      out << "  witness: " << w.value("name", std::string("?"));
      if (w.contains("dim") && w.contains("trial")) {
        out << " (dim " << w["dim"].get<long long>() << ", trial " << w["trial"].get<int>() << ")";
      }
      out << "\n";
    }
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
  }
  out << "\n" << passed << " of " << reports.size() << " suites passed\n";
  return out.str();
}

void emit_report(const std::vector<SuiteReport>& reports, ReportFormat format,
                 const std::optional<std::string>& path) {
  const std::string body = render_report(reports, format);
  if (!path || path->empty()) {
    std::cout << body << std::flush;
    if (!std::cout) throw Error(ErrorKind::IoError, "failed writing to standard output");
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw Error(ErrorKind::IoError, "cannot open '" + *path + "' for writing");
  file << body;
  if (!file) throw Error(ErrorKind::IoError, "failed writing '" + *path + "'");
}

}  // namespace seqprod
