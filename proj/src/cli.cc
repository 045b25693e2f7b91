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

#include "ore/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ore/decompose.h"
#include "ore/error.h"
#include "ore/hfe.h"
#include "ore/serialize.h"
#include "ore/skew.h"

namespace ore {
namespace {

// Bad invocation detected after flag parsing; reported with exit 2.
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field;
  std::vector<std::string> polys;
  std::string key;
  std::optional<int> degree;
  std::optional<uint64_t> bound;
  int trials = 200;
  std::optional<int> instances;
  uint64_t seed = 0;
  int max_rounds = kDefaultMaxRounds;
};

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageFailure("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

uint64_t PolicyMaxQ() {
  const char* env = std::getenv("TOOL_POLICY_MAX_Q");
  if (env == nullptr || *env == '\0') return kDefaultPolicyMaxQ;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageFailure("TOOL_POLICY_MAX_Q must be a positive integer");
  return v;
}

// Applies the tool's field-size cap before any tables are built.
Field CheckedField(const Json& j) {
  uint32_t p = 0;
  int e = 0;
  try {
    p = j.at("p").get<uint32_t>();
    e = j.at("e").get<int>();
  } catch (const Json::exception& ex) {
    Fail(Errc::kParseError, std::string("field: ") + ex.what());
  }
  const uint64_t cap = PolicyMaxQ();
  if (p >= 2 && e >= 1 && PowSaturating(p, e) > cap) {
    Fail(Errc::kPolicyBound, "q = " + std::to_string(p) + "^" + std::to_string(e) +
                                 " exceeds the cap " + std::to_string(cap) +
                                 " (set TOOL_POLICY_MAX_Q to raise it)");
  }
  return FieldFromJson(j);
}

Field LoadField(const std::string& path) { return CheckedField(ParseJson(ReadFile(path))); }

// Key files may hold a key pair or a single key.
const Json& PickKey(const Json& j, const char* part) {
  if (j.is_object() && j.contains(part)) return j.at(part);
  return j;
}

HfePublicKey LoadPublicKey(const std::string& path) {
  const Json j = PickKey(ParseJson(ReadFile(path)), "public");
  if (j.is_object() && j.contains("field")) CheckedField(j.at("field"));
  return PublicKeyFromJson(j);
}

HfeSecretKey LoadSecretKey(const std::string& path) {
  const Json j = PickKey(ParseJson(ReadFile(path)), "secret");
  if (j.is_object() && j.contains("field")) CheckedField(j.at("field"));
  return SecretKeyFromJson(j);
}

// A single digit array, or an array of them.
std::pair<std::vector<FqElem>, bool> ReadElements(std::istream& in, const Field& field) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const Json j = ParseJson(text);
  Enforce(j.is_array(), Errc::kParseError, "expected a digit array or a list of them");
  const bool batch = !j.empty() && j.front().is_array();
  std::vector<FqElem> xs;
  if (batch) {
    for (const auto& x : j) xs.push_back(ElemFromJson(x, field));
  } else {
    xs.push_back(ElemFromJson(j, field));
  }
  return {xs, batch};
}

Json ElemList(const Field& field, const std::vector<FqElem>& xs) {
  Json arr = Json::array();
  for (FqElem x : xs) arr.push_back(ToJson(field, x));
  return arr;
}

Json RunField(const Options& o) {
  const Field f = LoadField(o.field);
  return Json{{"field", ToJson(f)}, {"q", f.q()}};
}

Json RunDecompose(const Options& o) {
  const Field f = LoadField(o.field);
  const LinPoly l = LinPolyFromJson(ParseJson(ReadFile(o.polys.front())), f);
  Enforce(!l.IsZero(), Errc::kInvalidArgument, "cannot decompose the zero polynomial");
  Rng rng(o.seed);
  const Decomposition dec = DecomposeComplete(Phi(l), rng);
  Json factors = Json::array();
  Json degrees = Json::array();
  LinPoly product = LinPoly::Identity(f, l.s());
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    SkewPoly g = dec.factors[i];
    if (i == 0) g = g.ScaleLeft(dec.unit);
    const LinPoly factor = PhiInverse(g);
    factors.push_back(ToJson(factor));
    degrees.push_back(g.Degree());
    product = Compose(product, factor);
  }
  if (dec.factors.empty()) {
    factors.push_back(ToJson(PhiInverse(SkewPoly::Constant(f, l.s(), dec.unit))));
    product = PhiInverse(SkewPoly::Constant(f, l.s(), dec.unit));
  }
  return Json{{"input", ToJson(l)},
              {"factors", factors},
              {"skew_degrees", degrees},
              {"confidence", dec.confidence},
              {"composition_matches", product == l}};
}

Json RunGcldf(const Options& o) {
  if (o.polys.size() != 2) throw UsageFailure("gcldf needs exactly two --poly files");
  const Field f = LoadField(o.field);
  const LinPoly a = LinPolyFromJson(ParseJson(ReadFile(o.polys[0])), f);
  const LinPoly b = LinPolyFromJson(ParseJson(ReadFile(o.polys[1])), f);
  const GcldfResult r = Gcldf(a, b);
  return Json{{"gcldf", ToJson(r.gcldf)},
              {"first_cofactor", ToJson(r.first_cofactor)},
              {"second_cofactor", ToJson(r.second_cofactor)}};
}

Json RunKeygen(const Options& o) {
  const Field f = LoadField(o.field);
  Rng rng(o.seed);
  return ToJson(HfeKeygen(f, o.bound.value_or(DefaultDegreeBound(f)), rng));
}

Json RunEncrypt(const Options& o, std::istream& in) {
  const HfePublicKey pub = LoadPublicKey(o.key);
  const Field& f = pub.e.field();
  const auto [ms, batch] = ReadElements(in, f);
  std::vector<FqElem> ys;
  for (FqElem m : ms) ys.push_back(HfeEncrypt(pub.e, m));
  return batch ? ElemList(f, ys) : ToJson(f, ys.front());
}

Json RunDecrypt(const Options& o, std::istream& in) {
  const HfeSecretKey sec = LoadSecretKey(o.key);
  const Field& f = sec.d.field();
  const auto [ys, batch] = ReadElements(in, f);
  Json out = Json::array();
  for (FqElem y : ys) out.push_back(ElemList(f, HfeDecrypt(sec, y)));
  return batch ? out : out.front();
}

Json AttackSuccessJson(const AttackSuccess& s) {
  return Json{{"outcome", "success"}, {"rounds", s.rounds}, {"L", ToJson(s.l)},
              {"f", ToJson(s.f)}};
}

// Returns the report and whether the attack succeeded.
std::pair<Json, bool> RunAttackKey(const Options& o) {
  const HfePublicKey pub = LoadPublicKey(o.key);
  const uint64_t bound = o.bound.value_or(DefaultDegreeBound(pub.e.field()));
  Rng rng(o.seed);
  const AttackOutcome r = AttackGcldf(pub.e, bound, rng, o.max_rounds);
  if (const auto* s = std::get_if<AttackSuccess>(&r)) return {AttackSuccessJson(*s), true};
  return {Json{{"outcome", "failed"}, {"rounds", std::get<AttackFailed>(r).rounds}}, false};
}

// Seeded batch: keygen, attack, and on success decrypt-verify sampled
// ciphertexts with the recovered pair. Instance i draws from Derive(i).
Json RunScenario(const Options& o) {
  const Field f = LoadField(o.field);
  const uint64_t bound = o.bound.value_or(DefaultDegreeBound(f));
  const Rng root(o.seed);
  Json instances = Json::array();
  int successes = 0;
  for (int i = 0; i < *o.instances; ++i) {
    Rng rng = root.Derive(i);
    Json entry{{"index", i}};
    try {
      const HfeKeyPair kp = HfeKeygen(f, bound, rng);
      const AttackOutcome r = AttackGcldf(kp.pub.e, bound, rng, o.max_rounds);
      if (const auto* s = std::get_if<AttackSuccess>(&r)) {
        int verified = 0;
        for (int k = 0; k < kScenarioSamples; ++k) {
          const FqElem m = f.Random(rng);
          const auto found = DecryptWithFactor(s->l, s->f, HfeEncrypt(kp.pub.e, m));
          if (std::find(found.begin(), found.end(), m) != found.end()) ++verified;
        }
        ++successes;
        entry["outcome"] = "success";
        entry["rounds"] = s->rounds;
        entry["decrypt_samples"] = kScenarioSamples;
        entry["decrypt_verified"] = verified;
        entry["decrypt_ok"] = verified == kScenarioSamples;
      } else {
        entry["outcome"] = "failed";
        entry["rounds"] = std::get<AttackFailed>(r).rounds;
      }
    } catch (const Error& ex) {
      entry["outcome"] = "error";
      entry["error"] = ex.what();
    }
    instances.push_back(std::move(entry));
  }
  const int n = *o.instances;
  return Json{{"field", ToJson(f)},
              {"bound", bound},
              {"max_rounds", o.max_rounds},
              {"seed", o.seed},
              {"instances", instances},
              {"successes", successes},
              {"success_rate", n == 0 ? 0.0 : double(successes) / n}};
}

Json RunProbe(const Options& o) {
  const Field f = LoadField(o.field);
  if (*o.degree < 2) throw UsageFailure("--degree must be at least 2");
  if (o.trials < 0) throw UsageFailure("--trials must be nonnegative");
  return ToJson(EstimateSplitSuccess(f, 1, *o.degree, o.trials, o.seed));
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Decomposition of p-polynomials, skew-polynomial GCDs and toy HFE.", "oretool"};
  app.require_subcommand(1);
  Options o;

  auto add_seed = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "Random seed (default 0)");
  };
  auto* field = app.add_subcommand("field", "Validate a field description");
  field->add_option("--field", o.field, "Field JSON")->required();

  auto* decompose = app.add_subcommand("decompose", "Complete decomposition of a p^s-polynomial");
  decompose->add_option("--field", o.field, "Field JSON")->required();
  decompose->add_option("--poly", o.polys, "p^s-polynomial JSON")->required()->expected(1);
  add_seed(decompose);

  auto* gcldf = app.add_subcommand("gcldf", "Greatest common left-decompositional factor");
  gcldf->add_option("--field", o.field, "Field JSON")->required();
  gcldf->add_option("--poly", o.polys, "p^s-polynomial JSON (give twice)")->required();

  auto* keygen = app.add_subcommand("keygen", "Generate an HFE key pair");
  keygen->add_option("--field", o.field, "Field JSON")->required();
  keygen->add_option("--bound", o.bound, "Degree bound on D (default p^4)");
  add_seed(keygen);

  auto* encrypt = app.add_subcommand("encrypt", "Encrypt digit arrays read from stdin");
  encrypt->add_option("--key", o.key, "Public key or key pair JSON")->required();

  auto* decrypt = app.add_subcommand("decrypt", "Decrypt digit arrays read from stdin");
  decrypt->add_option("--key", o.key, "Secret key or key pair JSON")->required();

  auto* attack = app.add_subcommand("attack", "GCLDF key recovery on a key or a seeded batch");
  attack->add_option("--key", o.key, "Public key JSON");
  attack->add_option("--field", o.field, "Field JSON for a batch");
  attack->add_option("--instances", o.instances, "Batch size");
  attack->add_option("--bound", o.bound, "Degree bound on D (default p^4)");
  attack->add_option("--max-rounds", o.max_rounds, "GCLDF computations per attack")
      ->check(CLI::PositiveNumber);
  add_seed(attack);

  auto* probe = app.add_subcommand("probe", "Estimate first-try splitting success");
  probe->add_option("--field", o.field, "Field JSON")->required();
  probe->add_option("--degree", o.degree, "Skew degree of the products")->required();
  probe->add_option("--trials", o.trials, "Number of products (default 200)");
  add_seed(probe);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    Json result;
    int status = kExitOk;
    if (field->parsed()) {
      result = RunField(o);
    } else if (decompose->parsed()) {
      result = RunDecompose(o);
    } else if (gcldf->parsed()) {
      result = RunGcldf(o);
    } else if (keygen->parsed()) {
      result = RunKeygen(o);
    } else if (encrypt->parsed()) {
      result = RunEncrypt(o, in);
    } else if (decrypt->parsed()) {
      result = RunDecrypt(o, in);
    } else if (attack->parsed()) {
      const bool batch = o.instances.has_value();
      if (batch == !o.key.empty() || (batch && o.field.empty())) {
        throw UsageFailure("attack needs either --key, or --field with --instances");
      }
      if (batch && *o.instances < 0) throw UsageFailure("--instances must be nonnegative");
      if (batch) {
        result = RunScenario(o);
      } else {
        auto [report, ok] = RunAttackKey(o);
        result = std::move(report);
        if (!ok) {
          err << "AttackFailed: no left factor found within " << o.max_rounds << " rounds\n";
          status = kExitDomainError;
        }
      }
    } else if (probe->parsed()) {
      result = RunProbe(o);
    }
    out << result.dump(2) << "\n";
    return status;
  } catch (const UsageFailure& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const Error& ex) {
    err << ex.what() << "\n";
    return ex.code() == Errc::kParseError ? kExitUsage : kExitDomainError;
  }
}

}  // namespace ore
