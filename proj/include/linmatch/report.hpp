#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

#include "linmatch/extension.hpp"
#include "linmatch/fp.hpp"
#include "linmatch/linalg.hpp"
#include "linmatch/rational.hpp"

namespace linmatch {

/// One experiment run: config echo, verdicts and witnesses, coverage and the
/// seed that produced them. JSON is the canonical serialization (objects are
/// key-sorted, so identical reports serialize to identical bytes); csv and
/// text are one-way projections.
struct Report {
  int schema = 1;
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string coverage = "none";
  double wall_ms = 0.0;

  friend bool operator==(const Report& a, const Report& b) {
    return a.schema == b.schema && a.command == b.command && a.config == b.config &&
           a.result == b.result && a.seed == b.seed && a.coverage == b.coverage &&
           a.wall_ms == b.wall_ms;
  }
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_to_csv(const Report& r);
std::string report_to_text(const Report& r);

// --- element text encodings ---
// Witness elements are embedded in reports in the polynomial text format:
// comma-separated coordinates over the base field ("0,1,1,0"), rationals as
// "n/d". Tower scalars render each coordinate as a parenthesized tuple, e.g.
// "(0,1),(1,1)" for a GF(4)^2 vector, and the parser splits commas at
// parenthesis depth zero.

inline std::string scalar_text(const Fp& a) { return a.str(); }
inline std::string scalar_text(const Rational& r) { return r.str(); }

template <FieldScalar K>
std::string vec_text(const Vec<K>& v);

template <FieldDomain F>
std::string scalar_text(const Element<F>& e) {
  return "(" + vec_text(e.coords()) + ")";
}

template <FieldScalar K>
std::string vec_text(const Vec<K>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += scalar_text(v[i]);
  }
  return out;
}

template <FieldScalar K>
nlohmann::json mat_text_json(const Mat<K>& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : m) arr.push_back(vec_text(row));
  return arr;
}

inline std::vector<std::string> split_outside_parens(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

inline Fp scalar_from_text(const PrimeField& f, const std::string& s) { return f.parse_scalar(s); }
inline Rational scalar_from_text(const RationalField& f, const std::string& s) {
  return f.parse_scalar(s);
}

template <FieldDomain F>
Vec<typename F::Scalar> vec_from_text(const F& dom, const std::string& s);

template <FieldDomain F>
Element<F> scalar_from_text(const ExtensionField<F>& dom, const std::string& s) {
  require(s.size() >= 2 && s.front() == '(' && s.back() == ')', errc::invalid_argument,
          "tower coordinate must be parenthesized: '" + s + "'");
  Vec<typename F::Scalar> coords = vec_from_text(dom.ctx->base(), s.substr(1, s.size() - 2));
  require(coords.size() == dom.ctx->degree(), errc::invalid_argument,
          "tower coordinate has wrong length: '" + s + "'");
  return dom.ctx->from_coords(std::move(coords));
}

template <FieldDomain F>
Vec<typename F::Scalar> vec_from_text(const F& dom, const std::string& s) {
  Vec<typename F::Scalar> out;
  for (const std::string& tok : split_outside_parens(s)) {
    require(!tok.empty(), errc::invalid_argument, "empty coordinate in '" + s + "'");
    out.push_back(scalar_from_text(dom, tok));
  }
  return out;
}

template <FieldDomain F>
Mat<typename F::Scalar> mat_from_text_json(const F& dom, const nlohmann::json& j) {
  Mat<typename F::Scalar> out;
  out.reserve(j.size());
  for (const auto& row : j) out.push_back(vec_from_text(dom, row.get<std::string>()));
  return out;
}

}  // namespace linmatch
