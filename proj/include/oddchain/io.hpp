#ifndef ODDCHAIN_IO_HPP
#define ODDCHAIN_IO_HPP

// Algebra expressions and JSON spec files.
//
//   alg := 'Z' ['^' int] | 'Z_' int | 'Q' | 'Q_' int | '1'
//        | 'BOUNDED(' alg ')'
//        | 'PLPI(' alg ',' desc ',' alg ')'   | 'PLPII(' alg ',' alg ')'
//        | 'PLPIII(' alg ',' desc ',' desc ',' alg ')' | 'PLPIV(' alg ',' desc ',' alg ')'
//
// Spec file: {"ranks":[k1,..], "iota":["III"|"IV",..], "zdescs":[desc|null,..],
// "vdescs":[desc|null,..], "groups":["Z"|"Q",..]}, or {"algebra": "<alg>"}.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "literals.hpp"
#include "towers.hpp"

namespace oddchain {

namespace detail {

inline Algebra parse_algebra(Cursor &c) {
  if (c.accept("Z_")) return make_Zj(static_cast<int>(c.expect_integer()));
  if (c.accept("Q_")) return make_Qj(static_cast<int>(c.expect_integer()));
  if (c.accept_word("BOUNDED")) {
    c.expect("(");
    Algebra a = parse_algebra(c);
    c.expect(")");
    return adjoin_bounds(a);
  }
  auto product = [&](PlpKind kind, int descs) {
    c.expect("(");
    Algebra X = parse_algebra(c);
    std::optional<SubgroupDescriptor> d1, d2;
    if (descs >= 1) {
      c.expect(",");
      d1 = parse_descriptor(c);
    }
    if (descs >= 2) {
      c.expect(",");
      d2 = parse_descriptor(c);
    }
    c.expect(",");
    Algebra Y = parse_algebra(c);
    c.expect(")");
    switch (kind) {
    case PlpKind::I: return build_plp(kind, X, d1, std::nullopt, Y);
    case PlpKind::II: return build_plp(kind, X, std::nullopt, std::nullopt, Y);
    case PlpKind::III: return build_plp(kind, X, d1, d2, Y);
    case PlpKind::IV: return build_plp(kind, X, std::nullopt, d1, Y);
    }
    throw ValidationError("unknown product kind");
  };
  if (c.accept_word("PLPIV")) return product(PlpKind::IV, 1);
  if (c.accept_word("PLPIII")) return product(PlpKind::III, 2);
  if (c.accept_word("PLPII")) return product(PlpKind::II, 0);
  if (c.accept_word("PLPI")) return product(PlpKind::I, 1);
  if (c.accept_word("Q")) return Algebra::base(GroupChain::rationals());
  if (c.accept_word("Z")) {
    if (c.accept("^")) {
      auto k = c.expect_integer();
      if (k < 0) c.fail("rank must be non-negative");
      return Algebra::base(GroupChain::zlex(static_cast<int>(k)));
    }
    return Algebra::base(GroupChain::zlex(1));
  }
  if (c.accept_word("1")) return Algebra::base(GroupChain::trivial());
  c.fail("expected an algebra (Z, Z^k, Z_j, Q, Q_j, 1, BOUNDED, PLPI..PLPIV)");
}

} // namespace detail

/// Parse an algebra expression; products are validated as they are built.
inline Algebra parse_algebra(std::string_view text) {
  Cursor c(text);
  Algebra a = detail::parse_algebra(c);
  c.expect_end();
  return a;
}

/// Contents of a spec file: either a tower description or a single algebra.
struct SpecFile {
  std::optional<RepresentationSpec> representation;
  std::optional<Algebra> algebra;
};

inline SpecFile parse_spec_json(const nlohmann::json &j) {
  if (!j.is_object()) throw ValidationError("spec: expected a JSON object");
  SpecFile out;
  if (j.contains("algebra")) {
    if (!j["algebra"].is_string()) throw ValidationError("algebra: expected a string");
    try {
      out.algebra = parse_algebra(j["algebra"].get<std::string>());
    } catch (const ParseError &e) {
      throw ValidationError(std::string("algebra: ") + e.what());
    }
    return out;
  }
  RepresentationSpec s;
  if (!j.contains("ranks") || !j["ranks"].is_array()) throw ValidationError("ranks: expected an array");
  for (std::size_t i = 0; i < j["ranks"].size(); ++i) {
    const auto &r = j["ranks"][i];
    if (!r.is_number_integer()) throw ValidationError("ranks[" + std::to_string(i) + "]: expected an integer");
    s.ranks.push_back(r.get<int>());
  }
  auto list = [&](const char *key) -> nlohmann::json {
    if (!j.contains(key)) return nlohmann::json::array();
    if (!j[key].is_array()) throw ValidationError(std::string(key) + ": expected an array");
    return j[key];
  };
  auto iota = list("iota");
  for (std::size_t i = 0; i < iota.size(); ++i) {
    const auto &t = iota[i];
    std::string where = "iota[" + std::to_string(i) + "]";
    if (!t.is_string()) throw ValidationError(where + ": expected \"III\" or \"IV\"");
    auto v = t.get<std::string>();
    if (v == "III") s.iota.push_back(PlpKind::III);
    else if (v == "IV") s.iota.push_back(PlpKind::IV);
    else throw ValidationError(where + ": expected \"III\" or \"IV\", got \"" + v + "\"");
  }
  auto descs = [&](const char *key, std::vector<std::optional<SubgroupDescriptor>> &dst) {
    auto arr = list(key);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string where = std::string(key) + "[" + std::to_string(i) + "]";
      if (arr[i].is_null()) {
        dst.emplace_back();
      } else if (arr[i].is_string()) {
        try {
          dst.emplace_back(parse_descriptor(arr[i].get<std::string>()));
        } catch (const ParseError &e) {
          throw ValidationError(where + ": " + e.what());
        }
      } else {
        throw ValidationError(where + ": expected a descriptor string or null");
      }
    }
  };
  descs("zdescs", s.zdescs);
  descs("vdescs", s.vdescs);
  auto groups = list("groups");
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::string g = groups[i].is_string() ? groups[i].get<std::string>() : "";
    if (g != "Z" && g != "Q") throw ValidationError("groups[" + std::to_string(i) + "]: expected \"Z\" or \"Q\"");
    s.rational_stage.push_back(g == "Q");
  }
  s.validate();
  out.representation = std::move(s);
  return out;
}

inline SpecFile parse_spec_text(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ValidationError(std::string("spec: malformed JSON: ") + e.what());
  }
  return parse_spec_json(j);
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SpecFile load_spec(const std::string &path) { return parse_spec_text(read_file(path)); }

inline nlohmann::json to_json(const RepresentationSpec &s) {
  nlohmann::json j;
  j["ranks"] = s.ranks;
  j["iota"] = nlohmann::json::array();
  for (auto k : s.iota) j["iota"].push_back(to_string(k));
  auto descs = [](const std::vector<std::optional<SubgroupDescriptor>> &v) {
    auto a = nlohmann::json::array();
    for (const auto &d : v) a.push_back(d ? nlohmann::json(to_string(*d)) : nlohmann::json());
    return a;
  };
  if (!s.zdescs.empty()) j["zdescs"] = descs(s.zdescs);
  if (!s.vdescs.empty()) j["vdescs"] = descs(s.vdescs);
  if (!s.rational_stage.empty()) {
    j["groups"] = nlohmann::json::array();
    for (bool q : s.rational_stage) j["groups"].push_back(q ? "Q" : "Z");
  }
  return j;
}

} // namespace oddchain

#endif // ODDCHAIN_IO_HPP
