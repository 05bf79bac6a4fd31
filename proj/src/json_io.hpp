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

#ifndef LENSLAB_SRC_JSON_IO_HPP_
#define LENSLAB_SRC_JSON_IO_HPP_

#include <string>

#include "json.hpp"
#include "lenslab/alexander.hpp"
#include "lenslab/laurent.hpp"
#include "lenslab/params.hpp"
#include "lenslab/verify.hpp"

namespace lenslab {

nlohmann::json ToJson(const LaurentPoly& f);
nlohmann::json ToJson(const SurgeryParameter& sp);
nlohmann::json ToJson(const KnotClass& kc);
nlohmann::json ToJson(const VerificationReport& rep);

// p, k, k2, source, pass, fail, skip, failed check ids.
std::string ReportTsvHeader();
std::string ReportTsvLine(const VerificationReport& rep);

}  // namespace lenslab

#endif  // LENSLAB_SRC_JSON_IO_HPP_
