// Command-line front end: classify triples, stream verified solutions of the
// sum-product and cube-sum systems, evaluate the closed-form families, verify
// candidate solutions, and run the brute-force oracle.
//
// Exit codes: 0 success, 1 failed verification, 2 usage or parse error,
// 3 positivity cap exhausted, 4 condition or precondition violation.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumprod/sumprod.hpp"

namespace {

using nlohmann::json;
using namespace sumprod;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExhausted = 3;
constexpr int kExitViolation = 4;

Rat parse_arg(const std::string& text, const char* name) {
  try {
    return rat_parse(text);
  } catch (const ParseError& e) {
    std::cerr << "error: argument " << name << ": " << e.what() << "\n";
    std::exit(kExitUsage);
  }
}

Triple parse_triple(const std::vector<std::string>& args, const char* names[3]) {
  return Triple(parse_arg(args[0], names[0]), parse_arg(args[1], names[1]),
                parse_arg(args[2], names[2]));
}

json triple_json(const Triple& t) {
  return json{{"x", t.x.to_string()}, {"y", t.y.to_string()}, {"z", t.z.to_string()}};
}

json triple_list_json(const std::vector<Triple>& ts) {
  json out = json::array();
  for (const Triple& t : ts) {
    out.push_back(json::array({t.x.to_string(), t.y.to_string(), t.z.to_string()}));
  }
  return out;
}

json source_json(const Source& src) {
  if (const auto* g = std::get_if<GroupSource>(&src)) {
    return json{{"kind", "group"}, {"m", g->m}, {"k", g->k}};
  }
  if (const auto* f = std::get_if<FamilySource>(&src)) {
    const char* family =
        f->family == FamilySource::Family::GenusZero ? "genus_zero" : "product_zero";
    return json{{"kind", "family"}, {"family", family}, {"param", f->param.to_string()}};
  }
  return json{{"kind", "constant"}};
}

void emit_record(const SolutionRecord& rec) {
  json line = triple_json(rec.triple);
  line["source"] = source_json(rec.source);
  line["verified"] = rec.verified;
  std::cout << line.dump() << "\n" << std::flush;
}

const char* verdict_name(Classification::Verdict v) {
  switch (v) {
    case Classification::Verdict::NotPairwiseDistinct: return "not_pairwise_distinct";
    case Classification::Verdict::ProductZero: return "product_zero";
    case Classification::Verdict::GenusZero: return "genus_zero";
    case Classification::Verdict::Elliptic: return "elliptic";
  }
  return "?";
}

const char* torsion_name(TorsionType t) {
  switch (t) {
    case TorsionType::Z12: return "Z12";
    case TorsionType::Z9: return "Z9";
    case TorsionType::ZxZ3: return "ZxZ3";
  }
  return "?";
}

const char* torsion_pretty(TorsionType t) {
  switch (t) {
    case TorsionType::Z12: return "Z/12";
    case TorsionType::Z9: return "Z/9";
    case TorsionType::ZxZ3: return "Z x Z/3";
  }
  return "?";
}

int run_classify(const Triple& t, bool as_json) {
  Classification cls = classify_triple(t);
  auto [s, p] = elementary_invariants(t);
  Curve curve = build_curve(s, p);
  Rat disc = discriminant(curve);
  const char* infinite = cls.solutions_infinite == Infinitude::Yes ? "yes" : "unknown";

  if (as_json) {
    json out{{"triple", json::array({t.x.to_string(), t.y.to_string(), t.z.to_string()})},
             {"verdict", verdict_name(cls.verdict)},
             {"solutions_infinite", infinite},
             {"curve", {{"a4", curve.a4.to_string()}, {"a6", curve.a6.to_string()}}},
             {"discriminant", disc.to_string()},
             {"first_violations", triple_list_json(cls.first_violations)},
             {"second_violations", triple_list_json(cls.second_violations)}};
    out["torsion"] = cls.torsion ? json(torsion_name(*cls.torsion)) : json(nullptr);
    if (cls.genus_zero_params) {
      out["genus_zero"] = {{"scale", cls.genus_zero_params->scale.to_string()},
                           {"t", cls.genus_zero_params->t.to_string()}};
    } else {
      out["genus_zero"] = nullptr;
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
  }

  std::cout << "triple:       " << t << "\n";
  std::cout << "verdict:      " << verdict_name(cls.verdict) << "\n";
  if (cls.torsion) std::cout << "torsion:      " << torsion_pretty(*cls.torsion) << "\n";
  std::cout << "infinite:     " << infinite << "\n";
  std::cout << "curve:        v^2 = u^3 + a4*u + a6, a4 = " << curve.a4 << ", a6 = " << curve.a6
            << "\n";
  std::cout << "discriminant: " << disc << "\n";
  for (const Triple& w : cls.first_violations) {
    std::cout << "witness:      A(B-C)^3 = B(C-A)^3 at " << w << "\n";
  }
  for (const Triple& w : cls.second_violations) {
    std::cout << "witness:      AB^2+BC^2+CA^2 = 3ABC at " << w << "\n";
  }
  if (cls.genus_zero_params) {
    std::cout << "witness:      scale = " << cls.genus_zero_params->scale
              << ", t = " << cls.genus_zero_params->t << "\n";
  }
  return kExitOk;
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("SUMPROD_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "error: SUMPROD_CAP must be a positive integer, got \"" << env << "\"\n";
    std::exit(kExitUsage);
  }
  return kDefaultPositiveCap;
}

int run_solve(const Triple& t, std::size_t limit, bool positive, bool cubes,
              std::uint64_t cap) {
  if (positive) {
    // no --limit means "as many as the cap allows"
    std::size_t count = limit == 0 ? static_cast<std::size_t>(-1) : limit;
    PositiveSearch result =
        cubes ? positive_cube_stream(t, count, cap) : positive_stream(t, count, cap);
    for (const SolutionRecord& rec : result.records) emit_record(rec);
    if (result.cap_exhausted) {
      std::cerr << "cap exhausted: examined " << result.examined << " records, found "
                << result.records.size() << "\n";
      return kExitCapExhausted;
    }
    return kExitOk;
  }
  std::size_t emitted = 0;
  bool ended = false;
  if (cubes) {
    CubeStream stream(t);
    while (limit == 0 || emitted < limit) {
      auto rec = stream.next();
      if (!rec) { ended = true; break; }
      emit_record(*rec);
      ++emitted;
    }
  } else {
    SolutionStream stream(t);
    while (limit == 0 || emitted < limit) {
      auto rec = stream.next();
      if (!rec) { ended = true; break; }
      emit_record(*rec);
      ++emitted;
    }
  }
  if (ended) {
    std::cerr << "stream exhausted: the finite solution set has " << emitted << " records\n";
  }
  return kExitOk;
}

int run_verify(const Triple& ref, const Triple& cand, bool cubes) {
  bool ok = cubes ? verify_sum_cubes(ref, cand) : verify_sum_product(ref, cand);
  if (ok) {
    std::cout << "ok: " << cand << " solves the " << (cubes ? "cube-sum" : "sum-product")
              << " system of " << ref << "\n";
    return kExitOk;
  }
  std::cout << "failed: " << cand << " does not solve the "
            << (cubes ? "cube-sum" : "sum-product") << " system of " << ref << "\n";
  return kExitFailedCheck;
}

int run_oracle(const Triple& t, long height, bool cubes) {
  if (height < 1) {
    std::cerr << "error: --height must be at least 1\n";
    return kExitUsage;
  }
  OracleReport report = cubes ? brute_force_cube_solutions(t, Int(height))
                              : brute_force_solutions(t, Int(height));
  for (const Triple& sol : report.solutions) {
    std::cout << triple_json(sol).dump() << "\n";
  }
  std::cerr << "oracle: " << report.solutions.size() << " solutions with a coordinate of height <= "
            << report.bound.get_str() << (report.exhaustive ? " (exhaustive)" : "") << "\n";
  return kExitOk;
}

int run_param(const std::string& family, const std::vector<std::string>& forward,
              const std::vector<std::string>& invert, bool as_json) {
  FamilyParams::Kind kind;
  if (family == "first") kind = FamilyParams::Kind::First;
  else if (family == "second") kind = FamilyParams::Kind::Second;
  else if (family == "genus0") kind = FamilyParams::Kind::GenusZero;
  else {
    std::cerr << "error: family must be one of: first, second, genus0\n";
    return kExitUsage;
  }

  FamilyParams params{kind, Rat(0), Rat(0)};
  Triple triple;
  if (!invert.empty()) {
    const char* names[3] = {"a", "b", "c"};
    triple = parse_triple(invert, names);
    switch (kind) {
      case FamilyParams::Kind::First: params = family_first_invert(triple); break;
      case FamilyParams::Kind::Second: params = family_second_invert(triple); break;
      case FamilyParams::Kind::GenusZero: params = genus_zero_invert(triple); break;
    }
  } else {
    if (forward.size() != 2) {
      std::cerr << "error: param needs two arguments (scale and t) unless --invert is given\n";
      return kExitUsage;
    }
    params.scale = parse_arg(forward[0], kind == FamilyParams::Kind::GenusZero ? "c" : "r");
    params.t = parse_arg(forward[1], "t");
    switch (kind) {
      case FamilyParams::Kind::First: triple = family_first(params.scale, params.t); break;
      case FamilyParams::Kind::Second: triple = family_second(params.scale, params.t); break;
      case FamilyParams::Kind::GenusZero:
        triple = genus_zero_triple(params.scale, params.t);
        break;
    }
  }

  if (as_json) {
    json out{{"family", family},
             {"scale", params.scale.to_string()},
             {"t", params.t.to_string()},
             {"triple", json::array({triple.x.to_string(), triple.y.to_string(),
                                     triple.z.to_string()})}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "family: " << family << "\n";
    std::cout << "scale:  " << params.scale << "\n";
    std::cout << "t:      " << params.t << "\n";
    std::cout << "triple: " << triple << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solutions of x+y+z = a+b+c with xyz = abc or with equal cube sums"};
  app.require_subcommand(1);

  std::vector<std::string> triple_args;
  bool as_json = false;

  auto* classify = app.add_subcommand("classify", "Classify a triple (a, b, c)");
  classify->add_option("abc", triple_args, "the rationals a b c")->expected(3)->required();
  classify->add_flag("--json", as_json, "emit one JSON object instead of text");

  std::size_t limit = 0;
  bool positive = false;
  bool cubes = false;
  std::uint64_t cap = 0;
  auto* solve = app.add_subcommand("solve", "Stream solutions as JSON lines");
  solve->add_option("abc", triple_args, "the rationals a b c")->expected(3)->required();
  solve->add_option("--limit", limit, "number of records to emit (0 = unlimited)");
  solve->add_flag("--positive", positive, "only all-positive solutions, excluding permutations of the input");
  solve->add_flag("--cubes", cubes, "solve the equal-cube-sum system instead");
  solve->add_option("--cap", cap, "positivity search cap (overrides SUMPROD_CAP)");

  std::string family;
  std::vector<std::string> forward_args;
  std::vector<std::string> invert_args;
  auto* param = app.add_subcommand("param", "Evaluate or invert a closed-form family");
  param->add_option("family", family, "first | second | genus0")->required();
  param->add_option("params", forward_args, "scale and t")->expected(0, 2);
  param->add_option("--invert", invert_args, "recover parameters from a triple a b c")
      ->expected(3);
  param->add_flag("--json", as_json, "emit one JSON object instead of text");

  std::vector<std::string> verify_args;
  auto* verify = app.add_subcommand("verify", "Check a candidate solution exactly");
  verify->add_option("abcxyz", verify_args, "the rationals a b c x y z")->expected(6)->required();
  verify->add_flag("--cubes", cubes, "check the equal-cube-sum system instead");

  long height = 10;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive bounded-height solution search");
  oracle->add_option("abc", triple_args, "the rationals a b c")->expected(3)->required();
  oracle->add_option("--height", height, "coordinate height bound (default 10)");
  oracle->add_flag("--cubes", cubes, "search the equal-cube-sum system instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const char* abc_names[3] = {"a", "b", "c"};
  try {
    if (classify->parsed()) {
      return run_classify(parse_triple(triple_args, abc_names), as_json);
    }
    if (solve->parsed()) {
      if (cap == 0) cap = default_cap();
      return run_solve(parse_triple(triple_args, abc_names), limit, positive, cubes, cap);
    }
    if (param->parsed()) {
      return run_param(family, forward_args, invert_args, as_json);
    }
    if (verify->parsed()) {
      const char* xyz_names[3] = {"x", "y", "z"};
      Triple ref = parse_triple({verify_args[0], verify_args[1], verify_args[2]}, abc_names);
      Triple cand = parse_triple({verify_args[3], verify_args[4], verify_args[5]}, xyz_names);
      return run_verify(ref, cand, cubes);
    }
    if (oracle->parsed()) {
      return run_oracle(parse_triple(triple_args, abc_names), height, cubes);
    }
  } catch (const ConditionViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ExcludedParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const NotInFamilyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const NotASolutionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailedCheck;
  }
  return kExitUsage;
}
