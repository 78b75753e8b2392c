/*
   Copyright 2026 The dioph2 Authors

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

#include <variant>

#include <json.hpp>

#include "dioph2/certificates.hpp"

namespace dioph2 {

using Certificate = std::variant<SCertificate, TCertificate>;

/// Field spec as {"m": 8, "modulus": "0x11b"}.
nlohmann::json field_to_json(const Field& field);
const Field& field_from_json(const nlohmann::json& j);

/// Certificates serialize with every witness as a canonical expression string
/// and every constant as #x<hex>; parsing reproduces the certificate exactly.
nlohmann::json certificate_to_json(const SCertificate& cert);
nlohmann::json certificate_to_json(const TCertificate& cert);

/// Throws ParseError (malformed expression) or DomainError (bad structure).
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace dioph2
