#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tightcount/counting.hpp"

namespace tightcount::cli {

struct CliConfig {
  std::vector<std::string> positional;
  bool json = false;
  bool verify = false;
  bool list_chern = false;
  bool help = false;
  std::uint64_t max_enum = default_enumeration_cap;
};

// Everything one invocation reports for one triple.
struct Report {
  std::string input;       // canonical "M(r1, r2, r3)" of the parsed triple
  std::string normalized;  // canonical normal form
  CountReport counts;
  std::optional<std::vector<ChernVector>> chern_vectors;
};

namespace detail {

// int64-range values serialize as JSON numbers, larger ones as decimal strings
inline nlohmann::json big_to_json(const BigInt& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

inline BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt::from_string(j.get<std::string>());
  throw invalid_input_error("expected an integer or decimal string");
}

inline std::string negcf_to_text(const NegCF& cf) {
  std::string out = "[";
  for (std::size_t i = 0; i < cf.coeffs.size(); ++i) {
    if (i) out += ", ";
    out += cf.coeffs[i].to_string();
  }
  return out + "]";
}

}  // namespace detail

inline nlohmann::json to_json(const Report& rep) {
  nlohmann::json j;
  j["input"] = rep.input;
  j["normalized"] = rep.normalized;
  j["e0"] = detail::big_to_json(rep.counts.e0);
  nlohmann::json exps = nlohmann::json::array();
  for (const auto& cf : rep.counts.expansions) {
    nlohmann::json one = nlohmann::json::array();
    for (const auto& a : cf.coeffs) one.push_back(detail::big_to_json(a));
    exps.push_back(one);
  }
  j["expansions"] = exps;
  j["t_formula"] = detail::big_to_json(rep.counts.t_formula);
  j["upper_count"] = rep.counts.upper_count
                         ? detail::big_to_json(*rep.counts.upper_count)
                         : nlohmann::json(nullptr);
  j["lower_count"] = rep.counts.lower_count
                         ? detail::big_to_json(*rep.counts.lower_count)
                         : nlohmann::json(nullptr);
  j["agree"] = rep.counts.agree ? nlohmann::json(*rep.counts.agree)
                                : nlohmann::json(nullptr);
  if (rep.chern_vectors) {
    nlohmann::json vecs = nlohmann::json::array();
    for (const auto& v : *rep.chern_vectors) {
      nlohmann::json one = nlohmann::json::array();
      one.push_back(v.d12);
      one.push_back(v.d13);
      for (long long c : v.chain_rots) one.push_back(c);
      vecs.push_back(one);
    }
    j["chern_vectors"] = vecs;
  }
  return j;
}

inline Report parse_json_report(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Report rep;
  rep.input = j.at("input").get<std::string>();
  rep.normalized = j.at("normalized").get<std::string>();
  rep.counts.e0 = detail::big_from_json(j.at("e0"));
  const auto& exps = j.at("expansions");
  if (!exps.is_array() || exps.size() != 3)
    throw invalid_input_error("expected three expansions");
  for (int i = 0; i < 3; ++i)
    for (const auto& a : exps[i]) rep.counts.expansions[i].coeffs.push_back(detail::big_from_json(a));
  rep.counts.t_formula = detail::big_from_json(j.at("t_formula"));
  if (!j.at("upper_count").is_null())
    rep.counts.upper_count = detail::big_from_json(j.at("upper_count"));
  if (!j.at("lower_count").is_null())
    rep.counts.lower_count = detail::big_from_json(j.at("lower_count"));
  if (!j.at("agree").is_null()) rep.counts.agree = j.at("agree").get<bool>();
  if (j.contains("chern_vectors")) {
    std::vector<ChernVector> vecs;
    for (const auto& arr : j.at("chern_vectors")) {
      if (!arr.is_array() || arr.size() < 2)
        throw invalid_input_error("chern vector needs at least two entries");
      ChernVector v;
      v.d12 = arr[0].get<long long>();
      v.d13 = arr[1].get<long long>();
      for (std::size_t i = 2; i < arr.size(); ++i)
        v.chain_rots.push_back(arr[i].get<long long>());
      vecs.push_back(std::move(v));
    }
    rep.chern_vectors = std::move(vecs);
  }
  return rep;
}

inline std::string render_json(const Report& rep) { return to_json(rep).dump() + "\n"; }

inline std::string render_text(const Report& rep) {
  std::ostringstream os;
  os << "input:        " << rep.input << "\n";
  os << "normalized:   " << rep.normalized << "\n";
  os << "e0:           " << rep.counts.e0 << "\n";
  os << "expansions:   " << detail::negcf_to_text(rep.counts.expansions[0]) << " "
     << detail::negcf_to_text(rep.counts.expansions[1]) << " "
     << detail::negcf_to_text(rep.counts.expansions[2]) << "\n";
  os << "T:            " << rep.counts.t_formula << "\n";
  if (rep.counts.upper_count) os << "upper_count:  " << *rep.counts.upper_count << "\n";
  if (rep.counts.lower_count) os << "lower_count:  " << *rep.counts.lower_count << "\n";
  if (rep.counts.agree) os << "agree:        " << (*rep.counts.agree ? "yes" : "no") << "\n";
  if (rep.chern_vectors) {
    os << "chern_vectors (" << rep.chern_vectors->size() << "):\n";
    for (const auto& v : *rep.chern_vectors) {
      os << "  (" << v.d12 << ", " << v.d13;
      for (long long c : v.chain_rots) os << ", " << c;
      os << ")\n";
    }
  }
  return os.str();
}

inline std::string render(const Report& rep, bool json) {
  return json ? render_json(rep) : render_text(rep);
}

inline Report build_report(const SeifertTriple& t, bool with_verify,
                           bool with_chern_list, std::uint64_t cap) {
  Report rep;
  rep.input = t.to_string();
  NormalForm nf = normalize(t);
  rep.normalized = nf.to_string();
  rep.counts.expansions = expansions(nf);
  rep.counts.e0 = nf.e0;
  rep.counts.t_formula = t_formula(rep.counts.expansions);
  if (with_chern_list) {
    rep.chern_vectors = tightcount::chern_vectors(rep.counts.expansions, cap);
    rep.counts.lower_count = BigInt(static_cast<std::uint64_t>(rep.chern_vectors->size()));
  }
  if (with_verify) {
    rep.counts.upper_count = upper_count(rep.counts.expansions, cap);
    if (!rep.counts.lower_count)
      rep.counts.lower_count = BigInt(chern_count(rep.counts.expansions, cap));
    rep.counts.agree = (rep.counts.t_formula == *rep.counts.upper_count &&
                        rep.counts.t_formula == *rep.counts.lower_count);
  }
  return rep;
}

inline std::string usage() {
  return
      "usage: tightcount [r1 r2 r3] [--verify] [--list-chern] [--json] [--max-enum N]\n"
      "\n"
      "Counts the positive tight contact structures on the small Seifert fibered\n"
      "3-manifold M(r1, r2, r3). Surgery coefficients are exact fractions \"p/q\"\n"
      "(optional leading minus, no whitespace); integral coefficients are rejected\n"
      "and the invariant e0 must be >= 0. With no positional arguments, one\n"
      "\"r1 r2 r3\" triple is read per line from standard input.\n"
      "\n"
      "  --verify       run the sign-configuration and Chern-class enumerations\n"
      "                 and check both against the closed formula\n"
      "  --list-chern   list the distinct Chern vectors (lexicographic order)\n"
      "  --json         emit one JSON object per triple\n"
      "  --max-enum N   enumeration cap in assignments (default 10000000)\n"
      "  --help         show this text\n"
      "\n"
      "exit codes: 0 success, 1 malformed input, 2 out of scope (e0 < 0),\n"
      "            3 enumeration cap exceeded\n";
}

namespace detail {

inline CliConfig parse_args(const std::vector<std::string>& args) {
  CliConfig cfg;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") {
      cfg.json = true;
    } else if (a == "--verify") {
      cfg.verify = true;
    } else if (a == "--list-chern") {
      cfg.list_chern = true;
    } else if (a == "--help") {
      cfg.help = true;
    } else if (a == "--max-enum") {
      if (i + 1 >= args.size()) throw invalid_input_error("--max-enum needs a value");
      const std::string& v = args[++i];
      if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        throw invalid_input_error("--max-enum needs a positive integer");
      std::uint64_t n = 0;
      try {
        n = std::stoull(v);
      } catch (...) {
        throw invalid_input_error("--max-enum value out of range");
      }
      if (n == 0) throw invalid_input_error("--max-enum needs a positive integer");
      cfg.max_enum = n;
    } else if (a.size() >= 2 && a[0] == '-' && a[1] == '-') {
      throw invalid_input_error("unknown option " + a);
    } else {
      cfg.positional.push_back(a);  // "-1/2" is a rational, not an option
    }
  }
  if (!cfg.help && !cfg.positional.empty() && cfg.positional.size() != 3)
    throw invalid_input_error("expected exactly three surgery coefficients");
  return cfg;
}

inline int process_triple(const CliConfig& cfg, const std::string& s1,
                          const std::string& s2, const std::string& s3,
                          std::ostream& out, std::ostream& err) {
  try {
    SeifertTriple t(Rational::parse(s1), Rational::parse(s2), Rational::parse(s3));
    out << render(build_report(t, cfg.verify, cfg.list_chern, cfg.max_enum), cfg.json);
    return 0;
  } catch (const out_of_scope_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const enumeration_cap_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace detail

// Parse arguments, run, render. Batch mode processes every line and returns
// the first nonzero per-line code (0 when all lines succeed).
inline int run(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  try {
    cfg = detail::parse_args(args);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n" << usage();
    return 1;
  }
  if (cfg.help) {
    out << usage();
    return 0;
  }
  if (cfg.positional.size() == 3)
    return detail::process_triple(cfg, cfg.positional[0], cfg.positional[1],
                                  cfg.positional[2], out, err);

  int first_fail = 0;
  std::string line;
  bool printed = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    int rc;
    if (tok.size() != 3) {
      err << "error: expected three surgery coefficients, got \"" << line << "\"\n";
      rc = 1;
    } else {
      if (printed && !cfg.json) out << "\n";  // blank line between text blocks
      rc = detail::process_triple(cfg, tok[0], tok[1], tok[2], out, err);
      if (rc == 0) printed = true;
    }
    if (rc != 0 && first_fail == 0) first_fail = rc;
  }
  return first_fail;
}

}  // namespace tightcount::cli
