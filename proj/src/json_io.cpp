// Copyright 2026 The lenslab Authors
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

#include "json_io.hpp"

#include <sstream>

namespace lenslab {

nlohmann::json ToJson(const LaurentPoly& f) {
  return {{"min_exp", f.min_exp()},
          {"coeffs", std::vector<std::int64_t>(f.coeffs().begin(),
                                               f.coeffs().end())}};
}

nlohmann::json ToJson(const SurgeryParameter& sp) {
  return {{"p", sp.p}, {"k", sp.k}, {"k2", sp.k2}, {"q", sp.q},
          {"e", sp.e}, {"c", sp.c}, {"m", sp.m}};
}

nlohmann::json ToJson(const KnotClass& kc) {
  nlohmann::json j = {{"param", ToJson(kc.param)},
                      {"poly", ToJson(kc.poly)},
                      {"text", ToText(kc.poly)},
                      {"genus", Genus(kc.poly)},
                      {"source", std::string(SourceName(kc.source))}};
  if (kc.profile) {
    j["ns_h"] = kc.profile->ns_h;
    j["alpha"] = kc.profile->alpha;
    j["adjacent"] = kc.profile->adjacent;
  } else {
    j["ns_h"] = nullptr;
    j["alpha"] = nullptr;
    j["adjacent"] = nullptr;
  }
  return j;
}

nlohmann::json ToJson(const VerificationReport& rep) {
  nlohmann::json findings = nlohmann::json::array();
  for (const auto& f : rep.findings) {
    findings.push_back({{"check", f.check_id},
                        {"status", std::string(StatusName(f.status))},
                        {"detail", f.detail}});
  }
  return {{"param", ToJson(rep.param)},
          {"source", std::string(SourceName(rep.source))},
          {"poly", rep.poly_text},
          {"findings", findings},
          {"summary",
           {{"pass", rep.Count(Status::kPass)},
            {"fail", rep.Count(Status::kFail)},
            {"skip", rep.Count(Status::kSkip)}}}};
}

std::string ReportTsvHeader() {
  return "p\tk\tk2\tsource\tpass\tfail\tskip\tfailed";
}

std::string ReportTsvLine(const VerificationReport& rep) {
  std::ostringstream os;
  os << rep.param.p << '\t' << rep.param.k << '\t' << rep.param.k2 << '\t'
     << SourceName(rep.source) << '\t' << rep.Count(Status::kPass) << '\t'
     << rep.Count(Status::kFail) << '\t' << rep.Count(Status::kSkip) << '\t';
  std::string failed;
  for (const auto& f : rep.findings) {
    if (f.status != Status::kFail) continue;
    failed += (failed.empty() ? "" : ",") + f.check_id;
  }
  os << (failed.empty() ? "-" : failed);
  return os.str();
}

}  // namespace lenslab
