/* Copyright 2026 The boolnorm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#pragma once

// JSON encodings.
//
//   element   [1,3]                       sorted support
//   rows      [[1],[1,2]]                 row j at position j-1
//   norm spec {"kind":"weighted","weights":[...]}
//             {"kind":"graev","dist":[[...],...]}
//             {"kind":"closure","base":{"1":1,"2":3,"1,2":2}}
//             {"kind":"table","values":{...}}   same keys, used verbatim
//
// Malformed input raises Error(ParseError) or Error(InvalidSpec).

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolnorm/element.hpp"
#include "boolnorm/norms.hpp"
#include "boolnorm/reduction.hpp"
#include "boolnorm/verification.hpp"
#include "json.hpp"

namespace boolnorm {

using Json = nlohmann::json;

Json element_to_json(Element g);
Element element_from_json(const Json& j);

Json rows_to_json(std::span<const Element> rows);
std::vector<Element> rows_from_json(const Json& j);

/// Parses text, mapping syntax errors to Error(ParseError).
Json parse_json(std::string_view text);

NormOracle norm_from_json(const Json& spec);
inline NormOracle norm_from_json(std::string_view text) { return norm_from_json(parse_json(text)); }

/// "1,2" -> {1,2}; whitespace around entries is ignored.
Element element_from_key(std::string_view key);
std::string element_to_key(Element g);

Json to_json(const AxiomReport& report);
Json to_json(const LemmaReport& report);
Json to_json(const Reduction& reduction);

}  // namespace boolnorm
