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

#include "ore/serialize.h"

#include <functional>

#include "ore/error.h"

namespace ore {
namespace {

// Runs a decoder, turning JSON shape errors into ParseError.
template <typename F>
auto Decode(std::string_view what, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& ex) {
    Fail(Errc::kParseError, std::string(what) + ": " + ex.what());
  }
}

const Json& Member(const Json& j, const char* key) {
  Enforce(j.is_object() && j.contains(key), Errc::kParseError,
          std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<FqElem> ElemsFromJson(const Json& j, const Field& field) {
  Enforce(j.is_array(), Errc::kParseError, "coefficient list must be an array");
  std::vector<FqElem> out;
  for (const auto& x : j) out.push_back(ElemFromJson(x, field));
  return out;
}

Json ElemsToJson(const Field& field, const std::vector<FqElem>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(ToJson(field, x));
  return arr;
}

}  // namespace

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& ex) {
    size_t line = 1, col = 1;
    const size_t upto = std::min<size_t>(ex.byte == 0 ? 0 : ex.byte - 1, text.size());
    for (size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    Fail(Errc::kParseError, "line " + std::to_string(line) + ", column " +
                                std::to_string(col) + ": " + ex.what());
  }
}

Json ToJson(const Field& field) {
  Json j{{"p", field.p()}, {"e", field.e()}, {"modulus", field.modulus()}};
  if (!field.HasDefaultBasis()) j["basis"] = ElemsToJson(field, field.basis());
  return j;
}

Field FieldFromJson(const Json& j) {
  return Decode("field", [&] {
    const auto p = Member(j, "p").get<uint32_t>();
    const auto e = Member(j, "e").get<int>();
    std::optional<std::vector<uint32_t>> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null()) {
      modulus = j.at("modulus").get<std::vector<uint32_t>>();
    }
    Field f = Field::Create(p, e, modulus);
    if (j.contains("basis")) f = f.WithBasis(ElemsFromJson(j.at("basis"), f));
    return f;
  });
}

Json ToJson(const Field& field, FqElem x) { return field.Digits(x); }

FqElem ElemFromJson(const Json& j, const Field& field) {
  return Decode("element", [&] {
    Enforce(j.is_array(), Errc::kParseError, "element must be a digit array");
    const auto digits = j.get<std::vector<uint32_t>>();
    Enforce(static_cast<int>(digits.size()) <= field.e(), Errc::kParseError,
            "element has more than e digits");
    for (uint32_t d : digits) Enforce(d < field.p(), Errc::kParseError, "digit out of range");
    return field.FromDigits(digits);
  });
}

Json ToJson(const LinPoly& l) {
  return Json{{"s", l.s()}, {"coeffs", ElemsToJson(l.field(), l.coeffs())}};
}

LinPoly LinPolyFromJson(const Json& j, const Field& field) {
  return Decode("p^s-polynomial", [&] {
    const int s = j.contains("s") ? j.at("s").get<int>() : 1;
    Enforce(s >= 1, Errc::kParseError, "twist step must be positive");
    return LinPoly(field, s, ElemsFromJson(Member(j, "coeffs"), field));
  });
}

Json ToJson(const SkewPoly& f) {
  return Json{{"s", f.s()}, {"coeffs", ElemsToJson(f.field(), f.coeffs())}};
}

SkewPoly SkewPolyFromJson(const Json& j, const Field& field) {
  return Decode("skew polynomial", [&] {
    const int s = j.contains("s") ? j.at("s").get<int>() : 1;
    Enforce(s >= 1, Errc::kParseError, "twist exponent must be positive");
    return SkewPoly(field, s, ElemsFromJson(Member(j, "coeffs"), field));
  });
}

Json ToJson(const DOPoly& d) {
  Json quad = Json::array();
  for (const auto& [key, c] : d.quad()) {
    quad.push_back(Json::array({key.first, key.second, ToJson(d.field(), c)}));
  }
  return Json{{"quad", quad},
              {"lin", ToJson(d.lin())},
              {"constant", ToJson(d.field(), d.constant())}};
}

DOPoly DOPolyFromJson(const Json& j, const Field& field) {
  return Decode("DO polynomial", [&] {
    std::map<IndexPair, FqElem> quad;
    const Json& q = Member(j, "quad");
    Enforce(q.is_array(), Errc::kParseError, "quad must be an array");
    for (const auto& t : q) {
      Enforce(t.is_array() && t.size() == 3, Errc::kParseError,
              "quad entries are [i, j, digits]");
      const int i = t.at(0).get<int>(), k = t.at(1).get<int>();
      Enforce(i >= 0 && k >= 0, Errc::kParseError, "negative index");
      const IndexPair key{std::min(i, k), std::max(i, k)};
      const FqElem c = ElemFromJson(t.at(2), field);
      auto [it, inserted] = quad.emplace(key, c);
      if (!inserted) it->second = field.Add(it->second, c);
    }
    LinPoly lin = j.contains("lin") ? LinPolyFromJson(j.at("lin"), field) : LinPoly::Zero(field);
    FqElem constant =
        j.contains("constant") ? ElemFromJson(j.at("constant"), field) : field.Zero();
    return DOPoly(field, std::move(quad), std::move(lin), constant);
  });
}

Json ToJson(const MultivariateKey& key) {
  Json arr = Json::array();
  for (const auto& f : key.polys) {
    Json quad = Json::array();
    for (int k = 0; k < f.quad.rows(); ++k) {
      for (int l = k; l < f.quad.cols(); ++l) {
        if (f.quad(k, l) != 0) quad.push_back(Json::array({k, l, f.quad(k, l)}));
      }
    }
    arr.push_back(Json{{"constant", f.constant}, {"linear", f.linear}, {"quadratic", quad}});
  }
  return arr;
}

MultivariateKey MultivariateFromJson(const Json& j, const Field& field) {
  return Decode("multivariate key", [&] {
    Enforce(j.is_array() && static_cast<int>(j.size()) == field.e(), Errc::kParseError,
            "multivariate key needs e polynomials");
    const int n = field.e();
    const uint32_t p = field.p();
    MultivariateKey key;
    for (const auto& f : j) {
      QuadraticForm form{Member(f, "constant").get<uint32_t>() % p,
                         Member(f, "linear").get<FpVector>(), FpMatrix(p, n, n)};
      Enforce(static_cast<int>(form.linear.size()) == n, Errc::kParseError,
              "linear part needs e entries");
      for (auto& c : form.linear) c %= p;
      for (const auto& t : Member(f, "quadratic")) {
        const int k = t.at(0).get<int>(), l = t.at(1).get<int>();
        Enforce(0 <= k && k <= l && l < n, Errc::kParseError, "bad quadratic index");
        form.quad(k, l) = t.at(2).get<uint32_t>() % p;
      }
      key.polys.push_back(std::move(form));
    }
    return key;
  });
}

Json ToJson(const HfePublicKey& pub) {
  return Json{{"field", ToJson(pub.e.field())},
              {"E", ToJson(pub.e)},
              {"multivariate", ToJson(pub.multivariate)}};
}

HfePublicKey PublicKeyFromJson(const Json& j) {
  return Decode("public key", [&] {
    const Field field = FieldFromJson(Member(j, "field"));
    DOPoly e = DOPolyFromJson(Member(j, "E"), field);
    MultivariateKey mv = j.contains("multivariate")
                             ? MultivariateFromJson(j.at("multivariate"), field)
                             : ToMultivariate(e);
    return HfePublicKey{std::move(e), std::move(mv)};
  });
}

Json ToJson(const HfeSecretKey& sec) {
  return Json{{"field", ToJson(sec.d.field())},
              {"S", ToJson(sec.s)},
              {"D", ToJson(sec.d)},
              {"T", ToJson(sec.t)},
              {"d", sec.bound}};
}

HfeSecretKey SecretKeyFromJson(const Json& j) {
  return Decode("secret key", [&] {
    const Field field = FieldFromJson(Member(j, "field"));
    return MakeKeyPair(LinPolyFromJson(Member(j, "S"), field),
                       DOPolyFromJson(Member(j, "D"), field),
                       LinPolyFromJson(Member(j, "T"), field),
                       Member(j, "d").get<uint64_t>())
        .sec;
  });
}

Json ToJson(const HfeKeyPair& kp) {
  return Json{{"public", ToJson(kp.pub)}, {"secret", ToJson(kp.sec)}};
}

HfeKeyPair KeyPairFromJson(const Json& j) {
  return Decode("key pair", [&] {
    HfeSecretKey sec = SecretKeyFromJson(Member(j, "secret"));
    HfeKeyPair kp = MakeKeyPair(sec.s, sec.d, sec.t, sec.bound);
    const HfePublicKey pub = PublicKeyFromJson(Member(j, "public"));
    Enforce(pub.e == kp.pub.e, Errc::kParseError, "public key does not match secret key");
    return kp;
  });
}

Json ToJson(const SplitStats& st) {
  return Json{{"trials", st.trials},
              {"first_try_successes", st.first_try_successes},
              {"first_try_fraction", st.FirstTryFraction()},
              {"mean_tries", st.mean_tries},
              {"never_succeeded", st.never_succeeded},
              {"ci95", Json::array({st.ci95_lo, st.ci95_hi})},
              {"seed", st.seed}};
}

SplitStats SplitStatsFromJson(const Json& j) {
  return Decode("statistics record", [&] {
    SplitStats st;
    st.trials = Member(j, "trials").get<int>();
    st.first_try_successes = Member(j, "first_try_successes").get<int>();
    st.mean_tries = Member(j, "mean_tries").get<double>();
    st.never_succeeded = j.value("never_succeeded", 0);
    const auto ci = Member(j, "ci95").get<std::vector<double>>();
    Enforce(ci.size() == 2, Errc::kParseError, "ci95 needs two entries");
    st.ci95_lo = ci[0];
    st.ci95_hi = ci[1];
    st.seed = Member(j, "seed").get<uint64_t>();
    return st;
  });
}

}  // namespace ore
