// Copyright 2026 The Ore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of the domain values. Elements are digit arrays in the power
// basis, constant digit first; polynomial coefficient lists are indexed from
// the lowest term. Every parser reports malformed input as ParseError.

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "ore/decompose.h"
#include "ore/dopoly.h"
#include "ore/field.h"
#include "ore/hfe.h"
#include "ore/linpoly.h"
#include "ore/skew.h"

namespace ore {

using Json = nlohmann::json;

// Parses text, mapping syntax errors to ParseError with line and column.
Json ParseJson(std::string_view text);

Json ToJson(const Field& field);
Field FieldFromJson(const Json& j);

Json ToJson(const Field& field, FqElem x);
FqElem ElemFromJson(const Json& j, const Field& field);

Json ToJson(const LinPoly& l);
LinPoly LinPolyFromJson(const Json& j, const Field& field);

Json ToJson(const SkewPoly& f);
SkewPoly SkewPolyFromJson(const Json& j, const Field& field);

Json ToJson(const DOPoly& d);
DOPoly DOPolyFromJson(const Json& j, const Field& field);

Json ToJson(const MultivariateKey& key);
MultivariateKey MultivariateFromJson(const Json& j, const Field& field);

Json ToJson(const HfePublicKey& pub);
HfePublicKey PublicKeyFromJson(const Json& j);

Json ToJson(const HfeSecretKey& sec);
HfeSecretKey SecretKeyFromJson(const Json& j);

Json ToJson(const HfeKeyPair& kp);
HfeKeyPair KeyPairFromJson(const Json& j);

Json ToJson(const SplitStats& st);
SplitStats SplitStatsFromJson(const Json& j);

}  // namespace ore
